#include "bpdkit/bpd.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace bpdkit {

namespace {

enum class Dir { N, S, E, W };

struct Edges {
  bool top, bottom, left, right;
};

Edges edges_of(Tile t) {
  switch (t) {
    case Tile::Blank: return {false, false, false, false};
    case Tile::Vertical: return {true, true, false, false};
    case Tile::Horizontal: return {false, false, true, true};
    case Tile::R: return {false, true, false, true};
    case Tile::J: return {true, false, true, false};
    case Tile::Cross:
    case Tile::Bump: return {true, true, true, true};
  }
  return {false, false, false, false};
}

// Exit direction for a pipe entering tile t from side `in` (S or W).
std::optional<Dir> pass(Tile t, Dir in) {
  switch (t) {
    case Tile::Vertical: return in == Dir::S ? std::optional(Dir::N) : std::nullopt;
    case Tile::Horizontal: return in == Dir::W ? std::optional(Dir::E) : std::nullopt;
    case Tile::R: return in == Dir::S ? std::optional(Dir::E) : std::nullopt;
    case Tile::J: return in == Dir::W ? std::optional(Dir::N) : std::nullopt;
    case Tile::Cross: return in == Dir::S ? Dir::N : Dir::E;
    case Tile::Bump: return in == Dir::S ? Dir::E : Dir::N;
    case Tile::Blank: return std::nullopt;
  }
  return std::nullopt;
}

std::string where(Cell c) { return "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")"; }

Dir entry_dir(const std::vector<Cell>& path, std::size_t idx) {
  if (idx == 0) return Dir::S;
  return path[idx - 1].row == path[idx].row ? Dir::W : Dir::S;
}

Dir exit_dir(const std::vector<Cell>& path, std::size_t idx) {
  if (idx + 1 == path.size()) return Dir::E;
  return path[idx + 1].row == path[idx].row ? Dir::E : Dir::N;
}

}  // namespace

bool is_tile_char(char c) noexcept {
  switch (c) {
    case '.': case '|': case '-': case 'r': case 'j': case '+': case 'b': return true;
    default: return false;
  }
}

BumplessPipeDream::BumplessPipeDream(std::vector<std::string> rows) : rows_(std::move(rows)) {
  for (const auto& r : rows_) {
    if (r.size() != rows_.size()) throw Error(ErrorCode::InvalidBpd, "grid is not square");
    for (char c : r)
      if (!is_tile_char(c)) throw Error(ErrorCode::InvalidBpd, std::string("unknown tile '") + c + "'");
  }
}

std::vector<Cell> BumplessPipeDream::cells_of(Tile t) const {
  std::vector<Cell> out;
  for (int r = 1; r <= n(); ++r)
    for (int c = 1; c <= n(); ++c)
      if (at(r, c) == t) out.push_back({r, c});
  return out;
}

const char* to_string(BpdFailure f) {
  switch (f) {
    case BpdFailure::None: return "ok";
    case BpdFailure::Empty: return "empty";
    case BpdFailure::BoundaryMismatch: return "boundary_mismatch";
    case BpdFailure::EdgeMismatch: return "edge_mismatch";
    case BpdFailure::DoubleCrossing: return "double_crossing";
    case BpdFailure::HasBump: return "has_bump";
    case BpdFailure::TooManyBumps: return "too_many_bumps";
  }
  return "unknown";
}

int Routing::pipe_at(Cell c, bool from_below) const {
  for (std::size_t k = 0; k < paths.size(); ++k) {
    const auto& p = paths[k];
    for (std::size_t i = 0; i < p.size(); ++i)
      if (p[i] == c && (entry_dir(p, i) == Dir::S) == from_below) return static_cast<int>(k) + 1;
  }
  return 0;
}

int Routing::index_on(int label, Cell c) const {
  const auto& p = paths.at(label - 1);
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] == c) return static_cast<int>(i);
  return -1;
}

Routing route(const BumplessPipeDream& b) {
  const int n = b.n();
  Routing r;
  r.n = n;
  for (int label = 1; label <= n; ++label) {
    std::vector<Cell> path;
    Cell pos{n, label};
    Dir in = Dir::S;
    while (true) {
      if (static_cast<int>(path.size()) > 2 * n)
        throw Error(ErrorCode::InvalidBpd, "pipe " + std::to_string(label) + " does not terminate");
      const auto out = pass(b.at(pos), in);
      if (!out) throw Error(ErrorCode::InvalidBpd, "pipe " + std::to_string(label) + " is blocked at " + where(pos));
      path.push_back(pos);
      if (*out == Dir::N) {
        if (pos.row == 1) throw Error(ErrorCode::InvalidBpd, "pipe leaves through the top edge");
        --pos.row;
        in = Dir::S;
      } else {
        if (pos.col == n) break;
        ++pos.col;
        in = Dir::W;
      }
    }
    r.paths.push_back(std::move(path));
  }
  return r;
}

BumplessPipeDream tiles_of(const Routing& r) {
  const int n = r.n;
  std::map<Cell, std::vector<std::pair<Dir, Dir>>> use;
  for (const auto& p : r.paths)
    for (std::size_t i = 0; i < p.size(); ++i) {
      const Cell c = p[i];
      if (c.row < 1 || c.col < 1 || c.row > n || c.col > n)
        throw Error(ErrorCode::InvalidBpd, "path leaves the grid at " + where(c));
      use[c].emplace_back(entry_dir(p, i), exit_dir(p, i));
    }
  std::vector<std::string> rows(n, std::string(n, '.'));
  for (auto& [c, uses] : use) {
    std::sort(uses.begin(), uses.end(), [](auto a, auto b) { return static_cast<int>(a.first) < static_cast<int>(b.first); });
    Tile t{};
    if (uses.size() == 1) {
      const auto [in, out] = uses[0];
      if (in == Dir::S && out == Dir::N) t = Tile::Vertical;
      else if (in == Dir::W && out == Dir::E) t = Tile::Horizontal;
      else if (in == Dir::S && out == Dir::E) t = Tile::R;
      else t = Tile::J;
    } else if (uses.size() == 2 && uses[0].first == Dir::S && uses[1].first == Dir::W) {
      if (uses[0].second == Dir::N && uses[1].second == Dir::E) t = Tile::Cross;
      else if (uses[0].second == Dir::E && uses[1].second == Dir::N) t = Tile::Bump;
      else throw Error(ErrorCode::InvalidBpd, "pipes collide at " + where(c));
    } else {
      throw Error(ErrorCode::InvalidBpd, "pipes collide at " + where(c));
    }
    rows[c.row - 1][c.col - 1] = static_cast<char>(t);
  }
  return BumplessPipeDream(std::move(rows));
}

std::vector<std::pair<int, int>> bpd_crossing_pairs(const BumplessPipeDream& b) {
  const Routing r = route(b);
  std::vector<std::pair<int, int>> out;
  for (const Cell& c : b.cells_of(Tile::Cross)) {
    const int p = r.pipe_at(c, true), q = r.pipe_at(c, false);
    out.emplace_back(std::min(p, q), std::max(p, q));
  }
  return out;
}

BpdCheck validate_bpd(const BumplessPipeDream& b, bool allow_bump) {
  const int n = b.n();
  if (n == 0) return {BpdFailure::Empty, {}};
  for (int r = 1; r <= n; ++r)
    for (int c = 1; c <= n; ++c) {
      const Edges e = edges_of(b.at(r, c));
      if ((r == 1 && e.top) || (c == 1 && e.left) || (r == n && !e.bottom) || (c == n && !e.right))
        return {BpdFailure::BoundaryMismatch, {r, c}};
      if (r < n && e.bottom != edges_of(b.at(r + 1, c)).top) return {BpdFailure::EdgeMismatch, {r, c}};
      if (c < n && e.right != edges_of(b.at(r, c + 1)).left) return {BpdFailure::EdgeMismatch, {r, c}};
    }
  const auto bumps = b.cells_of(Tile::Bump);
  if (!allow_bump && !bumps.empty()) return {BpdFailure::HasBump, bumps.front()};
  if (bumps.size() > 1) return {BpdFailure::TooManyBumps, bumps[1]};
  const auto crosses = b.cells_of(Tile::Cross);
  const auto pairs = bpd_crossing_pairs(b);
  std::map<std::pair<int, int>, int> seen;
  for (std::size_t k = 0; k < pairs.size(); ++k)
    if (++seen[pairs[k]] > 1) return {BpdFailure::DoubleCrossing, crosses[k]};
  return {};
}

Permutation bpd_permutation(const BumplessPipeDream& b) {
  const Routing r = route(b);
  std::vector<int> w(r.n, 0);
  for (int label = 1; label <= r.n; ++label) w[r.paths[label - 1].back().row - 1] = label;
  return Permutation(std::move(w));
}

BumplessPipeDream rothe_bpd(const Permutation& w, int n) {
  n = std::max({n, w.size(), 1});
  const auto inv = w.inverse();
  std::vector<std::string> rows(n, std::string(n, '.'));
  for (int a = 1; a <= n; ++a)
    for (int c = 1; c <= n; ++c) {
      Tile t = Tile::Blank;
      const bool vertical = a > inv(c);
      const bool horizontal = c > w(a);
      if (c == w(a)) t = Tile::R;
      else if (vertical && horizontal) t = Tile::Cross;
      else if (vertical) t = Tile::Vertical;
      else if (horizontal) t = Tile::Horizontal;
      rows[a - 1][c - 1] = static_cast<char>(t);
    }
  return BumplessPipeDream(std::move(rows));
}

std::vector<BumplessPipeDream> enumerate_bpd(const Permutation& w, int n) {
  std::set<BumplessPipeDream> seen{rothe_bpd(w, n)};
  std::deque<BumplessPipeDream> queue(seen.begin(), seen.end());
  while (!queue.empty()) {
    const BumplessPipeDream b = std::move(queue.front());
    queue.pop_front();
    for (const auto& [from, to] : available_droops(b)) {
      auto next = droop(b, from, to);
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  return {seen.begin(), seen.end()};
}

void droop_path(std::vector<Cell>& path, Cell from, Cell to) {
  const int i = from.row, j = from.col, k = to.row, l = to.col;
  if (!(k > i && l > j)) throw Error(ErrorCode::DroopUnavailable, "droop target must lie strictly southeast");
  auto it = std::find(path.begin(), path.end(), Cell{k, j});
  const std::size_t len = static_cast<std::size_t>((k - i) + (l - j) + 1);
  if (it == path.end() || static_cast<std::size_t>(path.end() - it) < len)
    throw Error(ErrorCode::DroopUnavailable, "pipe does not turn at " + where(from));
  std::size_t s = static_cast<std::size_t>(it - path.begin());
  std::vector<Cell> before, after;
  for (int r = k; r >= i; --r) before.push_back({r, j});
  for (int c = j + 1; c <= l; ++c) before.push_back({i, c});
  for (int c = j; c <= l; ++c) after.push_back({k, c});
  for (int r = k - 1; r >= i; --r) after.push_back({r, l});
  if (!std::equal(before.begin(), before.end(), path.begin() + s))
    throw Error(ErrorCode::DroopUnavailable, "pipe does not turn at " + where(from));
  std::copy(after.begin(), after.end(), path.begin() + s);
}

void undroop_path(std::vector<Cell>& path, Cell from, Cell to) {
  const int k = from.row, l = from.col, i = to.row, j = to.col;
  if (!(k > i && l > j)) throw Error(ErrorCode::DroopUnavailable, "undroop target must lie strictly northwest");
  auto it = std::find(path.begin(), path.end(), Cell{k, j});
  const std::size_t len = static_cast<std::size_t>((k - i) + (l - j) + 1);
  if (it == path.end() || static_cast<std::size_t>(path.end() - it) < len)
    throw Error(ErrorCode::DroopUnavailable, "pipe does not turn at " + where(from));
  std::size_t s = static_cast<std::size_t>(it - path.begin());
  std::vector<Cell> before, after;
  for (int c = j; c <= l; ++c) before.push_back({k, c});
  for (int r = k - 1; r >= i; --r) before.push_back({r, l});
  for (int r = k; r >= i; --r) after.push_back({r, j});
  for (int c = j + 1; c <= l; ++c) after.push_back({i, c});
  if (!std::equal(before.begin(), before.end(), path.begin() + s))
    throw Error(ErrorCode::DroopUnavailable, "pipe does not turn at " + where(from));
  std::copy(after.begin(), after.end(), path.begin() + s);
}

bool droop_available(const BumplessPipeDream& b, Cell from, Cell to) {
  if (!b.contains(from) || !b.contains(to)) return false;
  if (!(to.row > from.row && to.col > from.col)) return false;
  if (b.at(from) != Tile::R || b.at(to) != Tile::Blank) return false;
  for (int p = from.row; p <= to.row; ++p)
    for (int q = from.col; q <= to.col; ++q) {
      if (Cell{p, q} == from) continue;
      const Tile t = b.at(p, q);
      if (t == Tile::R || t == Tile::J || t == Tile::Bump) return false;
    }
  return true;
}

BumplessPipeDream droop(const BumplessPipeDream& b, Cell from, Cell to) {
  if (!droop_available(b, from, to))
    throw Error(ErrorCode::DroopUnavailable, "no droop from " + where(from) + " into " + where(to));
  Routing r = route(b);
  const int label = r.pipe_at(from, true);
  droop_path(r.paths[label - 1], from, to);
  return tiles_of(r);
}

BumplessPipeDream undroop(const BumplessPipeDream& b, Cell from, Cell to) {
  if (!b.contains(from) || !b.contains(to) || b.at(from) != Tile::J || b.at(to) != Tile::Blank)
    throw Error(ErrorCode::DroopUnavailable, "no undroop from " + where(from) + " into " + where(to));
  Routing r = route(b);
  const int label = r.pipe_at(from, false);
  undroop_path(r.paths[label - 1], from, to);
  BumplessPipeDream out = tiles_of(r);
  if (!droop_available(out, to, from))
    throw Error(ErrorCode::DroopUnavailable, "no undroop from " + where(from) + " into " + where(to));
  return out;
}

std::vector<std::pair<Cell, Cell>> available_droops(const BumplessPipeDream& b) {
  std::vector<std::pair<Cell, Cell>> out;
  const auto blanks = b.blanks();
  for (const Cell& from : b.cells_of(Tile::R))
    for (const Cell& to : blanks)
      if (droop_available(b, from, to)) out.emplace_back(from, to);
  return out;
}

namespace {

void require_member(const BumplessPipeDream& b, const Permutation& v) {
  const auto check = validate_bpd(b);
  if (!check) throw Error(ErrorCode::InvalidBpd, std::string("not a bumpless pipe dream: ") + to_string(check.failure));
  if (bpd_permutation(b) != v)
    throw Error(ErrorCode::InvalidBpd, "bumpless pipe dream is not for " + v.to_string());
}

// Blank cells of lambda's diagonals, grouped by diagonal (col - row) in row order.
std::map<int, std::vector<Cell>> by_diagonal(const std::vector<Cell>& cells) {
  std::map<int, std::vector<Cell>> out;
  for (const Cell& c : cells) out[c.col - c.row].push_back(c);
  for (auto& [d, v] : out) std::sort(v.begin(), v.end());
  return out;
}

// Tile-by-tile search for every BPD of v in an n x n grid whose blank set is
// exactly `blank`.
struct Completion {
  int n;
  std::vector<std::vector<bool>> blank;
  Permutation v;
  std::vector<std::string> rows;
  std::vector<BumplessPipeDream> found;

  void run(int r, int c, std::vector<bool>& top, bool left) {
    if (r > n) {
      BumplessPipeDream b(rows);
      if (validate_bpd(b) && bpd_permutation(b) == v) found.push_back(std::move(b));
      return;
    }
    if (c > n) {
      int down = static_cast<int>(std::count(top.begin(), top.end(), true));
      if (down != r) return;
      run(r + 1, 1, top, false);
      return;
    }
    const bool t = top[c - 1];
    std::vector<Tile> options;
    if (!t && !left) options = blank[r - 1][c - 1] ? std::vector{Tile::Blank} : std::vector{Tile::R};
    else if (blank[r - 1][c - 1]) return;
    else if (t && !left) options = {Tile::Vertical};
    else if (!t && left) options = {Tile::Horizontal};
    else options = {Tile::J, Tile::Cross};
    for (Tile tile : options) {
      const Edges e = edges_of(tile);
      if (r == n && !e.bottom) continue;
      if (c == n && !e.right) continue;
      rows[r - 1][c - 1] = static_cast<char>(tile);
      const bool saved = top[c - 1];
      top[c - 1] = e.bottom;
      run(r, c + 1, top, e.right);
      top[c - 1] = saved;
    }
  }
};

}  // namespace

Tableau gamma(const BumplessPipeDream& b, const Permutation& v) {
  if (!is_vexillary(v)) throw Error(ErrorCode::NotVexillary, v.to_string() + " contains 2143");
  require_member(b, v);
  const Routing r = route(b);
  const Partition lambda = shape(v);
  auto blanks_by_diag = by_diagonal(b.blanks());
  auto cells_by_diag = by_diagonal(lambda.cells());
  std::vector<std::vector<int>> rows;
  for (int p : lambda.parts()) rows.emplace_back(p, 0);
  for (auto& [d, cells] : cells_by_diag) {
    const auto& blanks = blanks_by_diag[d];
    if (blanks.size() != cells.size())
      throw Error(ErrorCode::InvalidBpd, "blank tiles do not slide into the shape of " + v.to_string());
    for (std::size_t k = 0; k < cells.size(); ++k) {
      const Cell blank = blanks[k];
      std::set<int> above;
      for (int row = 1; row < blank.row; ++row) {
        const Cell c{row, blank.col};
        for (int label = 1; label <= r.n; ++label)
          if (r.index_on(label, c) >= 0) above.insert(label);
      }
      rows[cells[k].row - 1][cells[k].col - 1] = static_cast<int>(above.size()) + cells[k].row;
    }
  }
  for (const auto& [d, blanks] : blanks_by_diag)
    if (!cells_by_diag.count(d) && !blanks.empty())
      throw Error(ErrorCode::InvalidBpd, "blank tiles do not slide into the shape of " + v.to_string());
  return Tableau(std::move(rows));
}

BumplessPipeDream gamma_inverse(const Tableau& t, const Permutation& v, int n, bool by_lookup) {
  const Flag phi = flag(v);
  const Partition lambda = shape(v);
  if (t.shape() != lambda || !is_flagged(t, phi))
    throw Error(ErrorCode::NoPreimage, "tableau is not in the flagged set of " + v.to_string());
  n = std::max({n, v.size(), 1});
  if (by_lookup) {
    for (const auto& b : enumerate_bpd(v, n))
      if (gamma(b, v) == t) return b;
    throw Error(ErrorCode::NoPreimage, "no bumpless pipe dream maps to the tableau");
  }
  // Subtracting the row index leaves the pipe count above each blank; in a
  // BPD of a vexillary permutation that count plus the tableau row is the
  // blank's own row, which fixes where each entry slides back to.
  Completion search{n, std::vector<std::vector<bool>>(n, std::vector<bool>(n, false)), v,
                    std::vector<std::string>(n, std::string(n, '.')), {}};
  for (const Cell& c : lambda.cells()) {
    const int row = t.at(c.row, c.col);
    const int col = row + c.col - c.row;
    if (row < 1 || row > n || col < 1 || col > n)
      throw Error(ErrorCode::NoPreimage, "tableau entry places a blank outside the grid");
    search.blank[row - 1][col - 1] = true;
  }
  std::vector<bool> top(n, false);
  search.run(1, 1, top, false);
  for (const auto& b : search.found)
    if (gamma(b, v) == t) return b;
  throw Error(ErrorCode::NoPreimage, "no bumpless pipe dream maps to the tableau");
}

BumplessPipeDream embed(const BumplessPipeDream& b, int m) {
  const int n = b.n();
  if (m < n) throw Error(ErrorCode::InvalidArgument, "cannot embed into a smaller grid");
  std::vector<std::string> rows;
  for (const auto& r : b.rows()) rows.push_back(r + std::string(m - n, '-'));
  for (int a = n + 1; a <= m; ++a) {
    std::string row(m, '|');
    for (int c = n + 1; c <= m; ++c) row[c - 1] = c == a ? 'r' : (c > a ? '-' : '|');
    rows.push_back(std::move(row));
  }
  return BumplessPipeDream(std::move(rows));
}

}  // namespace bpdkit
