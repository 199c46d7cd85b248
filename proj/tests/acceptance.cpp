// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "bpdkit/bijections.hpp"
#include "bpdkit/insertion.hpp"
#include "bpdkit/schubert.hpp"
#include "bpdkit/verify.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "random_bpd.hpp"

using namespace bpdkit;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + std::string("failed: ") + what;
    }
  }
  void note(const std::string& text) { detail += (detail.empty() ? "" : "; ") + text; }
};

Outcome from_report(const VerifyReport& r) {
  Outcome o;
  o.require(r.pass, r.theorem + " has counterexamples, first: " + (r.failures.empty() ? "" : r.failures[0].dump()));
  o.require(r.cases > 0, r.theorem + " checked no cases");
  o.note(std::to_string(r.cases) + " cases");
  return o;
}

Outcome fixtures_check() {
  Outcome o;
  const auto big = fixtures::bpd(fixtures::kLarge);
  const Permutation w = bpd_permutation(big);
  const auto c = phi(big);
  o.require(c == fixtures::kLargeBiword, "phi of the large example");
  o.require(gamma(big, w) == fixtures::kLargeTableau, "gamma of the large example");
  o.require(q_tableau(c) == fixtures::kLargeTableau, "Q of phi of the large example");
  // The printed biword differs from phi(B) in its first letter (5 vs 6).
  // Its letters multiply to 12685734, not to w, so it cannot be phi(B).
  o.require(w == Permutation::parse("12587634"), "large example permutation");
  o.require(!validate_compatible(fixtures::kLargeBiwordPrinted, w).ok(), "printed biword rejected for w");
  o.require(q_tableau(fixtures::kLargeBiwordPrinted) == fixtures::kLargeTableau, "Q of the printed biword");
  o.note("phi(B) = printed biword with first letter 5 -> 6 (the printed letters multiply to 12685734)");

  const auto pq = eg_pq(fixtures::kEgBiword);
  o.require(pq.p_tableau == Tableau({{2, 3, 4}, {3}}), "EG P");
  o.require(pq.q_tableau == Tableau({{1, 1, 2}, {2}}), "EG Q");

  o.require(jdt(fixtures::kJdtInput) == Tableau({{1, 3, 4, 4}, {2, 4, 5}, {3, 5}}), "jdt example");

  auto b = fixtures::bpd(fixtures::kGaoHuangChain[0]);
  std::vector<std::pair<int, int>> pops;
  for (std::size_t k = 1; k < fixtures::kGaoHuangChain.size(); ++k) {
    const PopResult p = pop_nabla(b);
    pops.emplace_back(p.row, p.letter);
    o.require(p.next == fixtures::bpd(fixtures::kGaoHuangChain[k]), "pop chain grid " + std::to_string(k));
    b = p.next;
  }
  o.require(pops == std::vector<std::pair<int, int>>{{1, 3}, {1, 1}, {2, 4}, {3, 3}}, "pop sequence");
  return o;
}

Outcome counting() {
  Outcome o;
  int perms = 0;
  for (const auto& w : all_permutations(5)) {
    ++perms;
    o.require(enumerate_pd(w).size() == enumerate_bpd(w).size(), "|PD| = |BPD| for " + w.to_string());
  }
  const auto w = Permutation::parse("1432");
  o.require(enumerate_pd(w).size() == 5, "|PD(1432)| = 5");
  o.require(enumerate_bpd(w).size() == 5, "|BPD(1432)| = 5");
  const auto ssyt = enumerate_flagged(Partition({2, 1}), Flag{{2, 3}});
  o.require(ssyt.size() == 5, "|SSYT_(2,3)((2,1))| = 5");
  o.require(std::set<Tableau>(ssyt.begin(), ssyt.end()) == oracle::flagged_by_fillings(Partition({2, 1}), Flag{{2, 3}}),
            "flagged tableaux match brute-force fillings");
  o.note(std::to_string(perms) + " permutations");
  return o;
}

Outcome schubert_check(unsigned threads) {
  Outcome o = from_report(verify(Theorem::Schubert, 5, threads));
  // Monomials read off the five pipe dreams of 1432 (x_r per cross in row r).
  SparsePolynomial expected;
  for (const Exponent& e : std::vector<Exponent>{{2, 1}, {2, 0, 1}, {1, 2}, {1, 1, 1}, {0, 2, 1}}) expected.add(e, 1);
  const auto w = Permutation::parse("1432");
  o.require(schubert_pd(w) == expected, "S_1432 by pipe dreams");
  o.require(schubert_bpd(w) == expected, "S_1432 by bumpless pipe dreams");
  o.require(flagged_schur(w) == expected, "S_1432 as a flagged Schur polynomial");
  return o;
}

Outcome oracles_and_round_trips() {
  Outcome o;
  for (int n = 1; n <= 4; ++n)
    for (const auto& w : all_permutations(n)) {
      if (w.size() != n) continue;
      std::set<std::vector<Cell>> pds;
      for (const auto& p : enumerate_pd(w)) pds.insert(p.crosses());
      o.require(pds == oracle::pd_by_subsets(w), "PD oracle for " + w.to_string());
      std::set<std::vector<std::string>> bpds;
      for (const auto& b : enumerate_bpd(w, n)) bpds.insert(b.rows());
      o.require(bpds == oracle::bpd_by_tiles(w, n), "BPD oracle for " + w.to_string());
    }

  constexpr int kCases = 10000;
  std::mt19937 rng(31337);

  int droops = 0, droop_fail = 0;
  while (droops < kCases) {
    const int n = 4 + static_cast<int>(rng() % 4);
    const auto b = testkit::random_bpd(rng, n, static_cast<int>(rng() % (2 * n)));
    const auto moves = available_droops(b);
    if (moves.empty()) continue;
    const auto [from, to] = moves[rng() % moves.size()];
    const auto d = droop(b, from, to);
    if (!validate_bpd(d).ok() || bpd_permutation(d) != bpd_permutation(b) || undroop(d, to, from) != b) ++droop_fail;
    ++droops;
  }
  o.require(droop_fail == 0, std::to_string(droop_fail) + " droop/undroop round trips");

  int swaps = 0, swap_fail = 0;
  for (int attempt = 0; attempt < 200000 && swaps < kCases; ++attempt) {
    const auto b = testkit::random_bpd(rng, 5 + static_cast<int>(rng() % 3));
    for (const Cell& start : b.cells_of(Tile::Cross)) {
      if (swaps >= kCases) break;
      AlmostBPD a = embed(testkit::bump_at(b, start), b.n() + 2);
      Cell cur = a.cells_of(Tile::Bump).front();
      for (int hop = 0; hop < 8 && swaps < kCases; ++hop) {
        Cell tgt{};
        try {
          a = min_droop(a, cur, &tgt);
        } catch (const Error&) {
          break;
        }
        if (a.at(tgt) != Tile::Bump) break;
        AlmostBPD swapped;
        try {
          swapped = cross_bump_swap(a, tgt);
        } catch (const Error& e) {
          if (e.code() != ErrorCode::PipesDoNotCross) ++swap_fail;
          break;
        }
        ++swaps;
        const auto bumps = swapped.cells_of(Tile::Bump);
        if (bumps.size() != 1 || swapped.at(tgt) != Tile::Cross || !validate_bpd(swapped, true).ok() ||
            testkit::exit_rows(swapped) != testkit::exit_rows(a) || cross_bump_swap(swapped, bumps.front()) != a) {
          ++swap_fail;
          break;
        }
        a = swapped;
        cur = bumps.front();
      }
    }
  }
  o.require(swaps >= kCases, "only " + std::to_string(swaps) + " cross-bump swaps generated");
  o.require(swap_fail == 0, std::to_string(swap_fail) + " cross-bump swap round trips");

  int slides = 0, slide_fail = 0;
  while (slides < kCases) {
    const Tableau t = oracle::random_ssyt(rng, 5, 6);
    if (t.empty()) continue;
    const Tableau j = jdt(t);
    if (!is_semistandard(j) || jdt_inverse(j, t.shape(), t.at(1, 1)) != t) ++slide_fail;
    ++slides;
  }
  o.require(slide_fail == 0, std::to_string(slide_fail) + " jdt round trips");
  o.note(std::to_string(droops) + " droops, " + std::to_string(swaps) + " swaps, " + std::to_string(slides) + " slides");
  return o;
}

}  // namespace

int main() {
  const unsigned threads = 0;  // all cores
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"fixture fidelity", fixtures_check},
      {"gamma = Q o phi on vexillary S_5", [&] { return from_report(verify(Theorem::Main, 5, threads)); }},
      {"Q is a bijection PD(v) -> flagged tableaux on vexillary S_5",
       [&] { return from_report(verify(Theorem::Lenart, 5, threads)); }},
      {"jdt(gamma(B)) = gamma(nabla B) on Grassmannian S_6",
       [&] { return from_report(verify(Theorem::JdtNabla, 6, threads)); }},
      {"Little bump o phi = phi o Huang bump on S_4", [&] { return from_report(verify(Theorem::Canonical, 4, threads)); }},
      {"Q invariant under Little bumps on S_4", [&] { return from_report(verify(Theorem::QInvariance, 4, threads)); }},
      {"LS recording = Q o phi on S_4", [&] { return from_report(verify(Theorem::Recording, 4, threads)); }},
      {"counting", counting},
      {"Schubert polynomial formulas on S_5", [&] { return schubert_check(threads); }},
      {"oracle enumerators and round-trip suites", oracles_and_round_trips},
  };

  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %2zu %s (%.2fs) %s\n", o.pass ? "PASS" : "FAIL", k + 1, criteria[k].first.c_str(), secs,
                o.detail.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
