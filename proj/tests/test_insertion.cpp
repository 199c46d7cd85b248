#include "doctest.h"

#include "bpdkit/insertion.hpp"
#include "fixtures.hpp"

using namespace bpdkit;

namespace {

Tableau T(std::vector<std::vector<int>> rows) { return Tableau(std::move(rows)); }

bool strictly_increasing(const Tableau& t) {
  const auto& rows = t.rows();
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      if (c > 0 && rows[r][c - 1] >= rows[r][c]) return false;
      if (r > 0 && rows[r - 1][c] >= rows[r][c]) return false;
    }
  return true;
}

}  // namespace

TEST_CASE("column rule") {
  auto a = eg_insert_column({}, 4);
  CHECK(a.appended);
  CHECK(a.column == std::vector<int>{4});
  auto b = eg_insert_column({2, 4}, 3);
  CHECK(b.column == std::vector<int>{2, 3});
  CHECK(b.forwarded == 4);
  auto c = eg_insert_column({2, 3}, 2);
  CHECK(c.column == std::vector<int>{2, 3});
  CHECK(c.forwarded == 3);
  CHECK_FALSE(c.appended);
  auto d = eg_insert_column({3}, 2);
  CHECK(d.column == std::vector<int>{2});
  CHECK(d.forwarded == 3);
  CHECK_THROWS_AS(eg_insert_column({1, 5}, 5), Error);
}

TEST_CASE("tableau insertion stages of the worked example") {
  const std::vector<Tableau> stages{T({{4}}), T({{2, 4}}), T({{2, 4}, {3}}),
                                    T({{2, 3, 4}, {3}})};
  Tableau p;
  const auto& letters = fixtures::kEgBiword.letters;
  for (std::size_t k = 0; k < letters.size(); ++k) {
    p = eg_insert(p, letters[k]).tableau;
    CHECK(p == stages[k]);
  }
  const auto first = eg_insert(Tableau(), 7);
  CHECK(first.tableau == T({{7}}));
  CHECK(first.cell == Cell{1, 1});
}

TEST_CASE("insertion pairs") {
  const auto pq = eg_pq(fixtures::kEgBiword);
  CHECK(pq.p_tableau == T({{2, 3, 4}, {3}}));
  CHECK(pq.q_tableau == T({{1, 1, 2}, {2}}));
  CHECK(q_tableau(fixtures::kLargeBiword) == fixtures::kLargeTableau);
  CHECK(q_tableau(fixtures::kLargeBiwordPrinted) == fixtures::kLargeTableau);
  const auto single = eg_pq({{2}, {3}});
  CHECK(single.p_tableau == T({{3}}));
  CHECK(single.q_tableau == T({{2}}));
  CHECK(eg_pq({{}, {}}).p_tableau.empty());
  CHECK_THROWS_AS(eg_pq({{2, 1}, {1, 2}}), Error);
}

TEST_CASE("insertion is well defined on every compatible sequence of S_5") {
  for (const auto& w : all_permutations(5))
    for (const auto& c : enumerate_compatible(w)) {
      InsertionPair pq;
      REQUIRE_NOTHROW(pq = eg_pq(c));
      CHECK(strictly_increasing(pq.p_tableau));
      CHECK(is_semistandard(pq.q_tableau));
      CHECK(pq.p_tableau.shape() == pq.q_tableau.shape());
    }
}

TEST_CASE("dropping the first biword column rectifies Q for Grassmannian S_6") {
  for (const auto& w : all_permutations(6)) {
    if (!is_grassmannian(w) || w.is_identity()) continue;
    for (const auto& c : enumerate_compatible(w)) CHECK(q_tableau(c.tail()) == jdt(q_tableau(c)));
  }
}
