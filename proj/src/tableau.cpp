#include "bpdkit/tableau.hpp"

#include <algorithm>
#include <limits>

namespace bpdkit {

namespace {

constexpr int kInf = std::numeric_limits<int>::max();
constexpr int kNegInf = std::numeric_limits<int>::min();

std::vector<int> row_lengths(const std::vector<std::vector<int>>& rows) {
  std::vector<int> lens;
  for (const auto& r : rows) lens.push_back(static_cast<int>(r.size()));
  return lens;
}

}  // namespace

Tableau::Tableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
  while (!rows_.empty() && rows_.back().empty()) rows_.pop_back();
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i].empty() || (i > 0 && rows_[i].size() > rows_[i - 1].size()))
      throw Error(ErrorCode::InvalidTableau, "row lengths do not form a partition");
    for (int v : rows_[i])
      if (v < 1) throw Error(ErrorCode::InvalidTableau, "entries must be positive");
  }
}

Partition Tableau::shape() const { return Partition(row_lengths(rows_)); }

int Tableau::size() const noexcept {
  int s = 0;
  for (const auto& r : rows_) s += static_cast<int>(r.size());
  return s;
}

SkewTableau::SkewTableau(Partition inner, std::vector<std::vector<int>> rows) : inner_(std::move(inner)) {
  while (!rows.empty() && rows.back().empty() && static_cast<int>(rows.size()) > inner_.num_parts())
    rows.pop_back();
  if (static_cast<int>(rows.size()) < inner_.num_parts()) rows.resize(inner_.num_parts());
  std::vector<int> outer_parts;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const int r = static_cast<int>(i) + 1;
    outer_parts.push_back(inner_.part(r) + static_cast<int>(rows[i].size()));
    std::vector<int> full(inner_.part(r), 0);
    for (int v : rows[i]) {
      if (v < 1) throw Error(ErrorCode::InvalidTableau, "entries must be positive");
      full.push_back(v);
    }
    grid_.push_back(std::move(full));
  }
  try {
    outer_ = Partition(outer_parts);
  } catch (const Error&) {
    throw Error(ErrorCode::InvalidTableau, "skew rows do not form a partition shape");
  }
  if (!outer_.contains(inner_)) throw Error(ErrorCode::InvalidTableau, "inner shape not contained in outer");
  grid_.resize(outer_.num_parts());
}

SkewTableau SkewTableau::restrict(const Tableau& t, const Partition& inner) {
  if (!t.shape().contains(inner)) throw Error(ErrorCode::InvalidArgument, "inner shape exceeds tableau");
  std::vector<std::vector<int>> rows;
  for (int r = 1; r <= t.shape().num_parts(); ++r) {
    const auto& full = t.rows()[r - 1];
    rows.emplace_back(full.begin() + inner.part(r), full.end());
  }
  return SkewTableau(inner, std::move(rows));
}

std::vector<std::vector<int>> SkewTableau::rows() const {
  std::vector<std::vector<int>> out;
  for (int r = 1; r <= outer_.num_parts(); ++r) {
    const auto& full = grid_[r - 1];
    out.emplace_back(full.begin() + inner_.part(r), full.end());
  }
  return out;
}

bool SkewTableau::in_skew(Cell c) const noexcept {
  return outer_.contains_cell(c) && !inner_.contains_cell(c);
}

Tableau SkewTableau::to_tableau() const {
  if (!inner_.empty()) throw Error(ErrorCode::InvalidArgument, "skew tableau has a nonempty inner shape");
  return Tableau(grid_);
}

bool is_semistandard(const Tableau& t) {
  const auto& rows = t.rows();
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      if (c > 0 && rows[r][c - 1] > rows[r][c]) return false;
      if (r > 0 && rows[r - 1][c] >= rows[r][c]) return false;
    }
  return true;
}

bool is_semistandard(const SkewTableau& t) {
  for (const Cell& c : t.outer().cells()) {
    if (!t.in_skew(c)) continue;
    const Cell left{c.row, c.col - 1};
    const Cell up{c.row - 1, c.col};
    if (t.in_skew(left) && t.at(left) > t.at(c)) return false;
    if (t.in_skew(up) && t.at(up) >= t.at(c)) return false;
  }
  return true;
}

bool is_flagged(const Tableau& t, const Flag& phi) {
  if (!is_semistandard(t)) return false;
  if (static_cast<int>(phi.bounds.size()) != t.shape().num_parts()) return false;
  for (std::size_t r = 0; r < t.rows().size(); ++r)
    if (t.rows()[r].back() > phi.bounds[r]) return false;
  return true;
}

namespace {

void fill_flagged(const std::vector<Cell>& cells, std::size_t idx, const Flag& phi,
                  std::vector<std::vector<int>>& grid, std::vector<Tableau>& out) {
  if (idx == cells.size()) {
    out.emplace_back(grid);
    return;
  }
  const auto [r, c] = cells[idx];
  int lo = 1;
  if (c > 1) lo = std::max(lo, grid[r - 1][c - 2]);
  if (r > 1) lo = std::max(lo, grid[r - 2][c - 1] + 1);
  for (int v = lo; v <= phi.bounds[r - 1]; ++v) {
    grid[r - 1][c - 1] = v;
    fill_flagged(cells, idx + 1, phi, grid, out);
  }
}

}  // namespace

std::vector<Tableau> enumerate_flagged(const Partition& lambda, const Flag& phi) {
  if (static_cast<int>(phi.bounds.size()) != lambda.num_parts())
    throw Error(ErrorCode::InvalidArgument, "flag length differs from the number of parts");
  std::vector<std::vector<int>> grid;
  for (int p : lambda.parts()) grid.emplace_back(p, 0);
  std::vector<Tableau> out;
  fill_flagged(lambda.cells(), 0, phi, grid, out);
  return out;
}

SkewTableau jdt_slide(const SkewTableau& t, Cell inner_corner) {
  const Partition& mu = t.inner();
  const bool corner = mu.contains_cell(inner_corner) && inner_corner.col == mu.part(inner_corner.row) &&
                      mu.part(inner_corner.row + 1) < inner_corner.col;
  if (!corner) throw Error(ErrorCode::NotInnerCorner, "cell is not an inner corner");

  SkewTableau out = t;
  auto value = [&](Cell c) { return out.in_skew(c) ? out.grid_[c.row - 1][c.col - 1] : kInf; };
  // The hole is treated as an inner cell until it settles at an outer corner.
  Cell hole = inner_corner;
  std::vector<int> inner_parts = mu.parts();
  inner_parts[hole.row - 1] -= 1;
  out.inner_ = Partition(inner_parts);
  out.grid_[hole.row - 1][hole.col - 1] = kInf;
  while (true) {
    const Cell right{hole.row, hole.col + 1};
    const Cell below{hole.row + 1, hole.col};
    const int x = value(right);
    const int y = value(below);
    if (x == kInf && y == kInf) break;
    const Cell next = (y <= x) ? below : right;
    out.grid_[hole.row - 1][hole.col - 1] = out.grid_[next.row - 1][next.col - 1];
    out.grid_[next.row - 1][next.col - 1] = kInf;
    hole = next;
  }
  std::vector<int> outer_parts = out.outer_.parts();
  outer_parts[hole.row - 1] -= 1;
  out.grid_[hole.row - 1].pop_back();
  out.outer_ = Partition(outer_parts);
  out.grid_.resize(out.outer_.num_parts());
  return out;
}

SkewTableau reverse_slide(const SkewTableau& t, Cell outer_cell, int fill) {
  const Partition& lambda = t.outer();
  const bool addable = outer_cell.col == lambda.part(outer_cell.row) + 1 &&
                       (outer_cell.row == 1 || lambda.part(outer_cell.row - 1) >= outer_cell.col) &&
                       outer_cell.row <= lambda.num_parts() + 1 && !t.inner().contains_cell(outer_cell);
  if (!addable) throw Error(ErrorCode::InvalidArgument, "cell does not extend the outer shape");

  SkewTableau out = t;
  std::vector<int> outer_parts = lambda.parts();
  if (outer_cell.row > lambda.num_parts()) outer_parts.push_back(0);
  outer_parts[outer_cell.row - 1] += 1;
  out.outer_ = Partition(outer_parts);
  out.grid_.resize(out.outer_.num_parts());
  out.grid_[outer_cell.row - 1].push_back(kNegInf);
  Cell hole = outer_cell;
  auto entry = [&](Cell c) {
    if (c.row < 1 || c.col < 1 || !out.in_skew(c)) return kNegInf;
    return out.grid_[c.row - 1][c.col - 1];
  };
  while (true) {
    const Cell left{hole.row, hole.col - 1};
    const Cell above{hole.row - 1, hole.col};
    const int x = entry(left);
    const int y = entry(above);
    if (x == kNegInf && y == kNegInf) break;
    const Cell next = (y >= x) ? above : left;
    out.grid_[hole.row - 1][hole.col - 1] = out.grid_[next.row - 1][next.col - 1];
    out.grid_[next.row - 1][next.col - 1] = kNegInf;
    hole = next;
  }
  std::vector<int> inner_parts = t.inner().parts();
  if (hole.row > static_cast<int>(inner_parts.size())) inner_parts.resize(hole.row, 0);
  inner_parts[hole.row - 1] += 1;
  out.inner_ = Partition(inner_parts);
  out.grid_[hole.row - 1][hole.col - 1] = fill;
  return out;
}

Tableau rect(const SkewTableau& t) {
  SkewTableau cur = t;
  while (!cur.inner().empty()) {
    const int r = cur.inner().num_parts();
    cur = jdt_slide(cur, Cell{r, cur.inner().part(r)});
  }
  return cur.to_tableau();
}

Tableau jdt(const Tableau& t) {
  if (t.empty()) return t;
  return rect(SkewTableau::restrict(t, Partition({1})));
}

Tableau jdt_inverse(const Tableau& rectified, const Partition& original_shape, int corner_value) {
  const Partition mu = rectified.shape();
  if (original_shape.size() != mu.size() + 1 || !original_shape.contains(mu))
    throw Error(ErrorCode::NoPreimage, "original shape must add exactly one cell");
  Cell added{};
  for (int r = 1; r <= original_shape.num_parts(); ++r)
    if (original_shape.part(r) != mu.part(r)) added = {r, original_shape.part(r)};
  const SkewTableau start = SkewTableau::restrict(rectified, Partition());
  const SkewTableau back = reverse_slide(start, added);
  std::vector<std::vector<int>> rows;
  for (int r = 1; r <= back.outer().num_parts(); ++r) {
    std::vector<int> row;
    for (int c = 1; c <= back.outer().part(r); ++c)
      row.push_back(back.in_skew({r, c}) ? back.at({r, c}) : corner_value);
    rows.push_back(std::move(row));
  }
  if (corner_value < 1) throw Error(ErrorCode::NoPreimage, "corner value must be positive");
  Tableau result(std::move(rows));
  if (!is_semistandard(result) || jdt(result) != rectified)
    throw Error(ErrorCode::NoPreimage, "corner value is incompatible with the reverse slide");
  return result;
}

}  // namespace bpdkit
