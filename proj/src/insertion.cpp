#include "bpdkit/insertion.hpp"

#include <algorithm>
#include <string>

namespace bpdkit {

namespace {

std::vector<std::vector<int>> columns_of(const Tableau& t) {
  std::vector<std::vector<int>> cols;
  for (const auto& row : t.rows())
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (cols.size() <= c) cols.emplace_back();
      cols[c].push_back(row[c]);
    }
  return cols;
}

std::vector<std::vector<int>> rows_of(const std::vector<std::vector<int>>& cols) {
  std::vector<std::vector<int>> rows;
  for (const auto& col : cols)
    for (std::size_t r = 0; r < col.size(); ++r) {
      if (rows.size() <= r) rows.emplace_back();
      rows[r].push_back(col[r]);
    }
  return rows;
}

}  // namespace

ColumnInsertion eg_insert_column(std::vector<int> column, int x) {
  if (column.empty() || x > column.back()) {
    column.push_back(x);
    return {std::move(column), std::nullopt, true};
  }
  if (x == column.back())
    throw Error(ErrorCode::UndefinedInsertion, "inserting " + std::to_string(x) + " into a column ending in it");
  const auto k = static_cast<std::size_t>(std::upper_bound(column.begin(), column.end(), x) - column.begin());
  if (column[k] == x + 1 && k > 0 && column[k - 1] == x) return {std::move(column), x + 1, false};
  const int bumped = column[k];
  column[k] = x;
  return {std::move(column), bumped, false};
}

TableauInsertion eg_insert(const Tableau& t, int x) {
  auto cols = columns_of(t);
  for (std::size_t c = 0;; ++c) {
    if (c == cols.size()) cols.emplace_back();
    auto step = eg_insert_column(std::move(cols[c]), x);
    cols[c] = std::move(step.column);
    if (step.appended) {
      const Cell cell{static_cast<int>(cols[c].size()), static_cast<int>(c) + 1};
      return {Tableau(rows_of(cols)), cell};
    }
    x = *step.forwarded;
  }
}

InsertionPair eg_pq(const CompatibleSequence& c) {
  const auto check = validate_compatible(c);
  if (!check) throw Error(ErrorCode::InvalidBiword, std::string("biword violates ") + to_string(check.failure));
  Tableau p;
  std::vector<std::vector<int>> q;
  for (int k = 0; k < c.size(); ++k) {
    auto step = eg_insert(p, c.letters[k]);
    p = std::move(step.tableau);
    if (static_cast<int>(q.size()) < step.cell.row) q.emplace_back();
    q[step.cell.row - 1].push_back(c.rows[k]);
  }
  return {std::move(p), Tableau(std::move(q))};
}

Tableau q_tableau(const CompatibleSequence& c) { return eg_pq(c).q_tableau; }

}  // namespace bpdkit
