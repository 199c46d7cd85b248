#include "bpdkit/bijections.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace bpdkit {

namespace {

std::string where(Cell c) { return "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")"; }

// Exchange everything after `c` on pipes a and b.
void swap_tails(Routing& r, int a, int b, Cell c) {
  auto& pa = r.paths.at(a - 1);
  auto& pb = r.paths.at(b - 1);
  auto ia = std::find(pa.begin(), pa.end(), c);
  auto ib = std::find(pb.begin(), pb.end(), c);
  if (ia == pa.end() || ib == pb.end())
    throw Error(ErrorCode::InvalidBpd, "pipes " + std::to_string(a) + " and " + std::to_string(b) + " do not meet at " + where(c));
  std::vector<Cell> ta(ia + 1, pa.end()), tb(ib + 1, pb.end());
  pa.erase(ia + 1, pa.end());
  pb.erase(ib + 1, pb.end());
  pa.insert(pa.end(), tb.begin(), tb.end());
  pb.insert(pb.end(), ta.begin(), ta.end());
}

// A cell other than `skip` where pipes a and b cross.
std::optional<Cell> crossing_of(const Routing& r, const BumplessPipeDream& tiles, int a, int b, Cell skip) {
  for (const Cell& c : r.paths.at(a - 1)) {
    if (c == skip || tiles.at(c) != Tile::Cross) continue;
    if (r.index_on(b, c) >= 0) return c;
  }
  return std::nullopt;
}

// Step 2(a) of the nabla walk: every pipe other than `skip` that turns
// r then j in column j strictly between rows i and ip is drooped one column east.
void shift_turns(Routing& r, const BumplessPipeDream& tiles, int skip, int i, int ip, int j) {
  for (int k = i + 1; k < ip; ++k) {
    const Tile t = tiles.at(k, j);
    if (t != Tile::R && t != Tile::Bump) continue;
    const int q = r.pipe_at({k, j}, true);
    if (q == 0 || q == skip) continue;
    const auto& path = r.paths[q - 1];
    int idx = r.index_on(q, {k, j});
    while (idx > 0 && path[idx - 1].col == j) --idx;
    if (idx == 0) continue;  // q enters from the bottom edge
    const int kp = path[idx].row;
    if (kp >= ip) continue;
    droop_path(r.paths[q - 1], {k, j}, {kp, j + 1});
  }
}

std::vector<std::pair<int, int>> all_wire_pairs(const std::vector<int>& letters) {
  int m = 1;
  for (int a : letters) m = std::max(m, a + 1);
  std::vector<int> u(m);
  for (int k = 0; k < m; ++k) u[k] = k + 1;
  std::vector<std::pair<int, int>> out;
  out.reserve(letters.size());
  for (int a : letters) {
    out.emplace_back(std::min(u[a - 1], u[a]), std::max(u[a - 1], u[a]));
    std::swap(u[a - 1], u[a]);
  }
  return out;
}

struct OutOfGrid {};

// Target of the min-droop at `c` in the current tiles; throws OutOfGrid.
Cell min_droop_target(const BumplessPipeDream& tiles, Cell c) {
  int k = 1, l = 1;
  while (c.row + k <= tiles.n() && tiles.at(c.row + k, c.col) == Tile::Cross) ++k;
  while (c.col + l <= tiles.n() && tiles.at(c.row, c.col + l) == Tile::Cross) ++l;
  if (c.row + k > tiles.n() || c.col + l > tiles.n()) throw OutOfGrid{};
  return {c.row + k, c.col + l};
}

// r-turn (entered from below, left to the east) of pipe d in `row`.
std::optional<Cell> r_turn_in_row(const Routing& r, int d, int row) {
  const auto& p = r.paths.at(d - 1);
  for (std::size_t k = 0; k + 1 < p.size(); ++k) {
    if (p[k].row != row) continue;
    const bool from_below = k == 0 || p[k - 1].row != row;
    if (from_below && p[k + 1].row == row) return p[k];
  }
  if (!p.empty() && p.back().row == row && (p.size() == 1 || p[p.size() - 2].row != row)) return p.back();
  return std::nullopt;
}

int cap_for(int len, int n) { return std::max(1, len) * std::max(1, n * n); }

BumplessPipeDream huang_run(const BumplessPipeDream& start, int i, int j, const Permutation& w, BumpTrace& trace) {
  const int n = start.n();
  Routing r = route(start);
  BumplessPipeDream tiles = start;
  std::optional<Cell> cross;
  for (const Cell& c : tiles.cells_of(Tile::Cross)) {
    const int s = r.pipe_at(c, true), e = r.pipe_at(c, false);
    if (std::min(s, e) == i && std::max(s, e) == j) cross = c;
  }
  if (!cross) throw Error(ErrorCode::PipesDoNotCross, "pipes " + std::to_string(i) + " and " + std::to_string(j) + " do not cross");
  trace.steps.push_back({"bump", *cross, *cross, -1});
  swap_tails(r, i, j, *cross);
  tiles = tiles_of(r);

  Cell cur = *cross;
  const int cap = cap_for(length(w), n);
  for (int step = 0;; ++step) {
    if (step >= cap) throw Error(ErrorCode::IterationCap, "Huang bump did not settle");
    const int d = r.pipe_at(cur, true);
    const Cell tgt = min_droop_target(tiles, cur);
    try {
      droop_path(r.paths[d - 1], cur, tgt);
      tiles = tiles_of(r);
    } catch (const Error& e) {
      throw Error(ErrorCode::NoLegalTarget, "min-droop from " + where(cur) + " into " + where(tgt) + " fails: " + e.what());
    }
    trace.steps.push_back({"min-droop", cur, tgt, -1});
    const Tile t = tiles.at(tgt);
    if (t == Tile::J) {
      auto next = r_turn_in_row(r, d, tgt.row);
      if (!next) throw Error(ErrorCode::NoLegalTarget, "pipe " + std::to_string(d) + " has no r-turn in row " + std::to_string(tgt.row));
      cur = *next;
      continue;
    }
    if (t != Tile::Bump) throw Error(ErrorCode::NoLegalTarget, "min-droop lands on a '" + std::string(1, static_cast<char>(t)) + "' tile");
    const int k = r.pipe_at(tgt, true);
    if (auto other = crossing_of(r, tiles, d, k, tgt)) {
      swap_tails(r, d, k, tgt);
      swap_tails(r, d, k, *other);
      tiles = tiles_of(r);
      trace.steps.push_back({"cross-bump-swap", tgt, *other, -1});
      cur = *other;
      continue;
    }
    swap_tails(r, d, k, tgt);
    trace.steps.push_back({"cross", tgt, tgt, -1});
    break;
  }
  BumplessPipeDream out = tiles_of(r);
  if (auto chk = validate_bpd(out); !chk)
    throw Error(ErrorCode::InvalidBpd, std::string("Huang bump produced an invalid grid: ") + to_string(chk.failure));
  return out;
}

// Drops trailing rows and columns that only carry an embedded straight pipe.
BumplessPipeDream trim(BumplessPipeDream b) {
  while (b.n() > 1) {
    const int n = b.n();
    std::vector<std::string> rows(b.rows().begin(), b.rows().end() - 1);
    for (auto& row : rows) row.pop_back();
    BumplessPipeDream smaller(std::move(rows));
    if (embed(smaller, n) != b) break;
    b = std::move(smaller);
  }
  return b;
}

}  // namespace

PopResult pop_nabla(const BumplessPipeDream& b) {
  if (auto chk = validate_bpd(b); !chk)
    throw Error(ErrorCode::InvalidBpd, std::string("not a bumpless pipe dream: ") + to_string(chk.failure));
  const int n = b.n();
  const auto blanks = b.blanks();
  if (blanks.empty()) throw Error(ErrorCode::NoBlankTiles, "the BPD has no blank tiles");
  const Permutation w = bpd_permutation(b);
  const int row = std::min_element(blanks.begin(), blanks.end())->row;
  int col = 0;
  for (const Cell& c : blanks)
    if (c.row == row) col = std::max(col, c.col);

  Routing r = route(b);
  BumplessPipeDream tiles = b;
  Cell mark{row, col};
  int letter = 0;
  for (int step = 0; letter == 0; ++step) {
    if (step > n * n) throw Error(ErrorCode::IterationCap, "nabla walk did not finish");
    int i = mark.row, j = mark.col;
    while (j < n && tiles.at(i, j + 1) == Tile::Blank) ++j;
    if (j == n) throw Error(ErrorCode::InvalidBpd, "blank tile on the right edge");
    const int p = r.pipe_at({i, j + 1}, true);
    if (p == 0) throw Error(ErrorCode::InvalidBpd, "no pipe east of the blank block at " + where({i, j}));
    if (p != j + 1) {
      const auto& path = r.paths[p - 1];
      int idx = r.index_on(p, {i, j + 1});
      while (idx > 0 && path[idx - 1].col == j + 1) --idx;
      if (idx == 0) throw Error(ErrorCode::InvalidBpd, "pipe " + std::to_string(p) + " has no j-turn below " + where({i, j + 1}));
      const int ip = path[idx].row;
      shift_turns(r, tiles, p, i, ip, j);
      undroop_path(r.paths[p - 1], {ip, j + 1}, {i, j});
      tiles = tiles_of(r);
      mark = {ip, j + 1};
    } else {
      int ip = 0;
      for (int k = i + 1; k <= n && ip == 0; ++k)
        if (tiles.at(k, j + 1) == Tile::Cross && r.pipe_at({k, j + 1}, false) == j) ip = k;
      if (ip == 0) throw Error(ErrorCode::InvalidBpd, "pipes " + std::to_string(j) + " and " + std::to_string(j + 1) + " do not cross below " + where({i, j + 1}));
      shift_turns(r, tiles, j, i, ip, j);
      swap_tails(r, j, j + 1, {ip, j + 1});
      undroop_path(r.paths[j - 1], {ip, j + 1}, {i, j});
      tiles = tiles_of(r);
      letter = j;
    }
  }
  if (auto chk = validate_bpd(tiles); !chk || bpd_permutation(tiles) != w.simple_times(letter))
    throw Error(ErrorCode::InvalidBpd, "nabla step left BPD(s_a w)");
  return {row, letter, std::move(tiles)};
}

CompatibleSequence phi(const BumplessPipeDream& b) {
  CompatibleSequence out;
  BumplessPipeDream cur = b;
  while (!cur.blanks().empty()) {
    PopResult p = pop_nabla(cur);
    out.rows.push_back(p.row);
    out.letters.push_back(p.letter);
    cur = std::move(p.next);
  }
  if (auto chk = validate_bpd(cur); !chk)
    throw Error(ErrorCode::InvalidBpd, std::string("not a bumpless pipe dream: ") + to_string(chk.failure));
  return out;
}

BumplessPipeDream phi_inverse(const CompatibleSequence& c) {
  if (auto chk = validate_compatible(c); !chk)
    throw Error(ErrorCode::InvalidBiword, std::string("biword violates ") + to_string(chk.failure));
  static std::mutex mu;
  static std::map<Permutation, std::map<CompatibleSequence, BumplessPipeDream>> cache;
  const Permutation w = biword_permutation(c);
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(w);
  if (it == cache.end()) {
    std::map<CompatibleSequence, BumplessPipeDream> table;
    for (auto& b : enumerate_bpd(w)) table.emplace(phi(b), std::move(b));
    it = cache.emplace(w, std::move(table)).first;
  }
  auto hit = it->second.find(c);
  if (hit == it->second.end()) throw Error(ErrorCode::NoPreimage, "no BPD maps to this biword");
  return hit->second;
}

BumplessPipeDream phi_inverse(const PipeDream& p) { return phi_inverse(pd_to_biword(p)); }

std::pair<int, int> wire_pair(const std::vector<int>& letters, int m) {
  if (m < 0 || m >= static_cast<int>(letters.size())) throw Error(ErrorCode::InvalidArgument, "letter index out of range");
  for (int a : letters)
    if (a < 1) throw Error(ErrorCode::InvalidArgument, "letters must be positive");
  return all_wire_pairs(letters)[m];
}

bool bump_guard(const Permutation& w, int i, int j) {
  return i >= 1 && i < j && length(w.swap_values(i, j)) == length(w) - 1;
}

CompatibleSequence little_bump(const CompatibleSequence& c, int i, int j, BumpTrace* trace) {
  if (auto chk = validate_compatible(c); !chk)
    throw Error(ErrorCode::InvalidBiword, std::string("biword violates ") + to_string(chk.failure));
  const Permutation w = biword_permutation(c);
  if (!bump_guard(w, i, j))
    throw Error(ErrorCode::GuardFailure, "t_" + std::to_string(i) + std::to_string(j) + " w is not covered by w");
  auto pairs = all_wire_pairs(c.letters);
  const auto it = std::find(pairs.begin(), pairs.end(), std::pair{i, j});
  if (it == pairs.end()) throw Error(ErrorCode::PipesDoNotCross, "wires do not cross");
  int m = static_cast<int>(it - pairs.begin());

  BumpTrace local;
  local.transposition = {i, j};
  CompatibleSequence out = c;
  int size = std::max(w.size(), 1);
  for (int a : c.letters) size = std::max(size, a + 1);
  const int cap = cap_for(c.size(), size);
  for (int step = 0;; ++step) {
    if (step >= cap) throw Error(ErrorCode::IterationCap, "Little bump did not settle");
    ++out.letters[m];
    local.steps.push_back({"increment", {out.rows[m], out.letters[m]}, {out.rows[m], out.letters[m]}, m});
    if (is_reduced_word(out.letters)) break;
    pairs = all_wire_pairs(out.letters);
    int next = -1;
    for (int k = 0; k < out.size(); ++k)
      if (k != m && pairs[k] == pairs[m]) next = k;
    if (next < 0) throw Error(ErrorCode::InvalidBiword, "non-reduced word without a repeated crossing");
    m = next;
  }
  if (trace) *trace = std::move(local);
  return out;
}

CompatibleSequence replay_little(const CompatibleSequence& c, const BumpTrace& trace) {
  CompatibleSequence out = c;
  for (const auto& s : trace.steps) {
    if (s.kind != "increment" || s.index < 0 || s.index >= out.size())
      throw Error(ErrorCode::InvalidArgument, "not a Little bump trace");
    ++out.letters[s.index];
  }
  return out;
}

Grassmannianization grassmannianize(const CompatibleSequence& c) {
  if (auto chk = validate_compatible(c); !chk)
    throw Error(ErrorCode::InvalidBiword, std::string("biword violates ") + to_string(chk.failure));
  Grassmannianization g{c, {}};
  Permutation w = biword_permutation(c);
  const int cap = cap_for(c.size(), std::max(w.size(), 2)) * std::max(w.size(), 2);
  for (int step = 0; !is_grassmannian(w); ++step) {
    if (step >= cap) throw Error(ErrorCode::IterationCap, "grassmannianization did not settle");
    // With w* = w0 w w0 the last descent r of w* mirrors the first descent d
    // of w, and s = max{q > r : w*(q) < w*(r)} mirrors the leftmost p <= d
    // with w(p) > w(d+1).
    const int d = descents(w).front();
    int p = 1;
    while (w(p) < w(d + 1)) ++p;
    const int i = w(d + 1), j = w(p);
    g.result = little_bump(g.result, i, j);
    g.transpositions.emplace_back(i, j);
    w = biword_permutation(g.result);
  }
  return g;
}

AlmostBPD min_droop(const AlmostBPD& b, Cell cell, Cell* target) {
  if (auto chk = validate_bpd(b, true); !chk)
    throw Error(ErrorCode::InvalidBpd, std::string("not an almost BPD: ") + to_string(chk.failure));
  if (!b.contains(cell) || (b.at(cell) != Tile::R && b.at(cell) != Tile::Bump))
    throw Error(ErrorCode::InvalidArgument, "no r-turn at " + where(cell));
  Routing r = route(b);
  Cell tgt;
  try {
    tgt = min_droop_target(b, cell);
  } catch (const OutOfGrid&) {
    throw Error(ErrorCode::NoLegalTarget, "min-droop from " + where(cell) + " leaves the grid");
  }
  const int d = r.pipe_at(cell, true);
  AlmostBPD out;
  try {
    droop_path(r.paths[d - 1], cell, tgt);
    out = tiles_of(r);
  } catch (const Error& e) {
    throw Error(ErrorCode::NoLegalTarget, "min-droop from " + where(cell) + " into " + where(tgt) + " fails: " + e.what());
  }
  if (target) *target = tgt;
  return out;
}

AlmostBPD cross_bump_swap(const AlmostBPD& b, Cell cell) {
  if (!b.contains(cell) || b.at(cell) != Tile::Bump) throw Error(ErrorCode::InvalidArgument, "no bump at " + where(cell));
  Routing r = route(b);
  const int s = r.pipe_at(cell, true), e = r.pipe_at(cell, false);
  const auto other = crossing_of(r, b, s, e, cell);
  if (!other) throw Error(ErrorCode::PipesDoNotCross, "the pipes of the bump do not cross");
  swap_tails(r, s, e, cell);
  swap_tails(r, s, e, *other);
  return tiles_of(r);
}

BumplessPipeDream huang_bump(const BumplessPipeDream& b, int i, int j, BumpTrace* trace) {
  if (auto chk = validate_bpd(b); !chk)
    throw Error(ErrorCode::InvalidBpd, std::string("not a bumpless pipe dream: ") + to_string(chk.failure));
  const Permutation w = bpd_permutation(b);
  const Permutation inv = w.inverse();
  if (!(i >= 1 && i < j && inv(i) > inv(j)))
    throw Error(ErrorCode::PipesDoNotCross, "pipes " + std::to_string(i) + " and " + std::to_string(j) + " do not cross");
  for (int extra = 1; extra <= 2; ++extra) {
    BumpTrace local;
    local.transposition = {i, j};
    local.grid_size = std::max(b.n(), j) + extra;
    try {
      BumplessPipeDream out = huang_run(embed(b, local.grid_size), i, j, w, local);
      if (trace) *trace = std::move(local);
      return out;
    } catch (const OutOfGrid&) {
    }
  }
  throw Error(ErrorCode::GuardFailure, "Huang bump needs more room than two extra rows");
}

BumplessPipeDream replay_huang(const BumplessPipeDream& b, const BumpTrace& trace) {
  Routing r = route(embed(b, trace.grid_size));
  for (const auto& s : trace.steps) {
    const int south = r.pipe_at(s.at, true), west = r.pipe_at(s.at, false);
    if (s.kind == "bump" || s.kind == "cross") {
      swap_tails(r, south, west, s.at);
    } else if (s.kind == "min-droop") {
      droop_path(r.paths[south - 1], s.at, s.to);
    } else if (s.kind == "cross-bump-swap") {
      swap_tails(r, south, west, s.at);
      swap_tails(r, south, west, s.to);
    } else {
      throw Error(ErrorCode::InvalidArgument, "unknown bump step '" + s.kind + "'");
    }
  }
  return tiles_of(r);
}

LsRecording ls_recording(const BumplessPipeDream& b) {
  const auto g = grassmannianize(phi(b));
  LsRecording out;
  BumplessPipeDream cur = b;
  out.chain.push_back(bpd_permutation(cur));
  for (auto [i, j] : g.transpositions) {
    cur = trim(huang_bump(cur, i, j));
    out.chain.push_back(bpd_permutation(cur));
  }
  out.tableau = gamma(cur, out.chain.back());
  return out;
}

}  // namespace bpdkit
