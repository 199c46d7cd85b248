#pragma once

// Random bumpless pipe dreams and almost-BPDs for round-trip suites.

#include <algorithm>
#include <random>
#include <vector>

#include "bpdkit/bijections.hpp"
#include "bpdkit/bpd.hpp"

namespace testkit {

using namespace bpdkit;

// Turns the cross at c into a bump by exchanging the two pipes' tails.
inline AlmostBPD bump_at(const BumplessPipeDream& b, Cell c) {
  Routing r = route(b);
  const int s = r.pipe_at(c, true), w = r.pipe_at(c, false);
  auto& ps = r.paths[s - 1];
  auto& pw = r.paths[w - 1];
  const auto is = std::find(ps.begin(), ps.end(), c) - ps.begin();
  const auto iw = std::find(pw.begin(), pw.end(), c) - pw.begin();
  std::vector<Cell> ts(ps.begin() + is + 1, ps.end()), tw(pw.begin() + iw + 1, pw.end());
  ps.resize(is + 1);
  pw.resize(iw + 1);
  ps.insert(ps.end(), tw.begin(), tw.end());
  pw.insert(pw.end(), ts.begin(), ts.end());
  return tiles_of(r);
}

inline std::vector<int> exit_rows(const AlmostBPD& b) {
  std::vector<int> out;
  for (const auto& p : route(b).paths) out.push_back(p.back().row);
  return out;
}

// Rothe BPD of a random w in S_n followed by up to `steps` random droops
// (3n when negative).
inline BumplessPipeDream random_bpd(std::mt19937& rng, int n, int steps = -1) {
  std::vector<int> v(n);
  for (int k = 0; k < n; ++k) v[k] = k + 1;
  std::shuffle(v.begin(), v.end(), rng);
  auto b = rothe_bpd(Permutation(v), n);
  if (steps < 0) steps = 3 * n;
  for (int step = 0; step < steps; ++step) {
    const auto moves = available_droops(b);
    if (moves.empty()) break;
    const auto& [from, to] = moves[rng() % moves.size()];
    b = droop(b, from, to);
  }
  return b;
}

}  // namespace testkit
