#include "doctest.h"

#include <fstream>
#include <sstream>

#include "bpdkit/io.hpp"
#include "bpdkit/render.hpp"
#include "fixtures.hpp"

using namespace bpdkit;

namespace {

std::string slurp(const std::string& name) {
  std::ifstream in(std::string(BPDKIT_GOLDEN_DIR) + "/" + name);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

template <class T>
T round_trip(const T& x) {
  const json j = x;
  return parse_json(j.dump()).get<T>();
}

}  // namespace

TEST_CASE("json round trips") {
  for (const auto& w : all_permutations(4)) {
    CHECK(round_trip(w) == w);
    for (const auto& c : enumerate_compatible(w)) {
      CHECK(round_trip(c) == c);
      const auto pd = biword_to_pd(c, 4);
      CHECK(round_trip(pd) == pd);
    }
    for (const auto& b : enumerate_bpd(w)) CHECK(round_trip(b) == b);
  }
  CHECK(round_trip(fixtures::kLargeTableau) == fixtures::kLargeTableau);
  CHECK(round_trip(Tableau()) == Tableau());
  CHECK(round_trip(schubert_pd(Permutation::parse("1432"))) == schubert_pd(Permutation::parse("1432")));
  BumpTrace tr;
  huang_bump(fixtures::bpd(fixtures::kHuangStart), 3, 4, &tr);
  const BumpTrace back = round_trip(tr);
  CHECK(back.transposition == tr.transposition);
  CHECK(back.steps == tr.steps);
  CHECK(back.grid_size == tr.grid_size);
}

TEST_CASE("json shapes") {
  const json p = schubert_pd(Permutation::simple(1));
  CHECK(p["terms"] == json::parse(R"([{"exp":[1],"coeff":1}])"));
  CHECK(parse_json(R"("1432")").get<Permutation>() == Permutation::parse("1432"));
  CHECK(parse_json("[2,1,3]").get<Permutation>() == Permutation::parse("213"));
  CHECK(object_kind(parse_json(R"({"rows":["r"]})")) == "bpd");
  CHECK(object_kind(parse_json(R"({"rows":[[1]]})")) == "tableau");
  CHECK(object_kind(parse_json(R"({"rows":[1],"letters":[1]})")) == "biword");
  CHECK(object_kind(parse_json(R"(["r-","|r"])")) == "bpd");
  CHECK(object_kind(parse_json("[2,1]")) == "permutation");
  CHECK(object_kind(parse_json("[]")).empty());
  CHECK_THROWS_AS(parse_json("{"), Error);
  CHECK_THROWS_AS(parse_json(R"({"type":"bpd","rows":[[1]]})").get<Tableau>(), Error);
  CHECK_THROWS_AS(parse_json(R"({"rows":[1]})").get<CompatibleSequence>(), Error);
}

TEST_CASE("ascii") {
  CHECK(render_ascii(fixtures::bpd(fixtures::kBpdExample)) == "..r--\n.r+--\nrj|r-\n|rj|r\n||r++\n");
  CHECK(render_ascii(fixtures::kLargeTableau) == "1 1 2 3\n3 3 3\n5 5\n6 6\n");
}

TEST_CASE("tikz golden files") {
  CHECK(render_tikz(fixtures::bpd(fixtures::kBpdExample)) == slurp("bpd_example.tex"));
  CHECK(render_tikz(fixtures::bpd(fixtures::kBpd1432[0])) == slurp("bpd_1432_0.tex"));
  const auto doc = tikz_document(render_tikz(fixtures::bpd(fixtures::kBpd1432[0])));
  for (const char* m : {"\\nowire", "\\vwire", "\\hwire", "\\are", "\\jay", "\\cross", "\\bump"})
    CHECK(doc.find(std::string("\\newcommand{") + m + "}") != std::string::npos);
}
