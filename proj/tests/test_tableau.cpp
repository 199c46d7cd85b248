#include "doctest.h"

#include <random>
#include <set>

#include "bpdkit/tableau.hpp"
#include "oracles.hpp"

using namespace bpdkit;

namespace {

Tableau T(std::vector<std::vector<int>> rows) { return Tableau(std::move(rows)); }

const Tableau kJdtInput = T({{1, 1, 3, 4}, {2, 4, 4, 5}, {3, 5}});

}  // namespace

TEST_CASE("semistandard checks") {
  for (const auto& t : {T({{1, 1}, {2}}), T({{1, 1}, {3}}), T({{1, 2}, {2}}), T({{1, 2}, {3}}), T({{2, 2}, {3}})})
    CHECK(is_semistandard(t));
  CHECK_FALSE(is_semistandard(T({{1, 1}, {1}})));
  CHECK_FALSE(is_semistandard(T({{2, 1}})));
  CHECK_THROWS_AS(T({{1}, {1, 2}}), Error);
  CHECK_THROWS_AS(T({{0}}), Error);
}

TEST_CASE("flagged enumeration") {
  const auto got = enumerate_flagged(Partition({2, 1}), Flag{{2, 3}});
  const std::vector<Tableau> expected{T({{1, 1}, {2}}), T({{1, 1}, {3}}), T({{1, 2}, {2}}), T({{1, 2}, {3}}),
                                      T({{2, 2}, {3}})};
  CHECK(got == expected);
  CHECK(enumerate_flagged(Partition(), Flag{}) == std::vector<Tableau>{Tableau()});
  CHECK(enumerate_flagged(Partition({1}), Flag{{3}}) == std::vector<Tableau>{T({{1}}), T({{2}}), T({{3}})});
  CHECK_THROWS_AS(enumerate_flagged(Partition({2, 1}), Flag{{2}}), Error);
}

TEST_CASE("flagged enumeration matches brute-force fillings") {
  for (const auto& parts : std::vector<std::vector<int>>{{1}, {2}, {1, 1}, {2, 1}, {3, 1}, {2, 2}, {3, 2, 1}})
    for (int k = 1; k <= 4; ++k) {
      const Partition lambda(parts);
      const Flag phi{std::vector<int>(lambda.num_parts(), k)};
      const auto got = enumerate_flagged(lambda, phi);
      CHECK(got.size() == oracle::flagged_by_fillings(lambda, phi).size());
      for (const auto& t : got) CHECK(is_flagged(t, phi));
    }
  const Partition lambda({3, 2, 1});
  const Flag phi{{2, 3, 4}};
  const auto got = enumerate_flagged(lambda, phi);
  CHECK(std::set<Tableau>(got.begin(), got.end()) == oracle::flagged_by_fillings(lambda, phi));
}

TEST_CASE("jdt worked example") {
  // Intermediate states of the worked slide, skew entries only.
  SkewTableau s = SkewTableau::restrict(kJdtInput, Partition({1}));
  CHECK(s.rows() == std::vector<std::vector<int>>{{1, 3, 4}, {2, 4, 4, 5}, {3, 5}});
  const Tableau out = jdt(kJdtInput);
  CHECK(out == T({{1, 3, 4, 4}, {2, 4, 5}, {3, 5}}));
  CHECK(jdt(T({{7}})) == Tableau());
  CHECK(jdt_inverse(out, kJdtInput.shape(), 1) == kJdtInput);
  CHECK(jdt_inverse(Tableau(), Partition({1}), 4) == T({{4}}));
}

TEST_CASE("slide rules") {
  // Single skew cell with empty inner shape cannot slide: no inner corner.
  SkewTableau one(Partition(), {{5}});
  CHECK(rect(one) == T({{5}}));
  SkewTableau s = SkewTableau::restrict(kJdtInput, Partition({1}));
  CHECK_THROWS_AS(jdt_slide(s, Cell{2, 1}), Error);
  // Slide then reverse slide along the vacated outer corner restores the filling.
  const SkewTableau slid = jdt_slide(s, Cell{1, 1});
  Cell vacated{};
  for (int r = 1; r <= s.outer().num_parts(); ++r)
    if (s.outer().part(r) != slid.outer().part(r)) vacated = {r, s.outer().part(r)};
  const SkewTableau back = reverse_slide(slid, vacated);
  CHECK(back.inner() == s.inner());
  CHECK(back.rows() == s.rows());
}

TEST_CASE("jdt round trips on small flagged sets") {
  for (const auto& t : enumerate_flagged(Partition({2, 1}), Flag{{2, 3}})) {
    const Tableau j = jdt(t);
    CHECK(is_semistandard(j));
    CHECK(j.size() == t.size() - 1);
    CHECK(jdt_inverse(j, t.shape(), t.at(1, 1)) == t);
  }
  for (const auto& parts : std::vector<std::vector<int>>{{1}, {2}, {1, 1}, {2, 1}, {3, 1}, {2, 2}, {3, 2}, {3, 2, 1}})
    for (const auto& t : enumerate_flagged(Partition(parts), Flag{std::vector<int>(parts.size(), 4)}))
      CHECK(jdt_inverse(jdt(t), t.shape(), t.at(1, 1)) == t);
}

TEST_CASE("jdt on random tableaux") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 1000; ++trial) {
    const Tableau t = oracle::random_ssyt(rng, 5, 6);
    if (t.empty()) continue;
    const Tableau j = jdt(t);
    CHECK(is_semistandard(j));
    CHECK(jdt_inverse(j, t.shape(), t.at(1, 1)) == t);
  }
}

TEST_CASE("jdt_inverse rejects impossible corners") {
  CHECK_THROWS_AS(jdt_inverse(T({{1, 2}}), Partition({3}), 3), Error);
  CHECK_THROWS_AS(jdt_inverse(T({{1, 2}}), Partition({4}), 1), Error);
}
