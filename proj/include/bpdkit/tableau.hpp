#pragma once

#include <vector>

#include "bpdkit/common.hpp"
#include "bpdkit/partition.hpp"

namespace bpdkit {

/// Positive integer filling of a Young diagram, stored row by row.
class Tableau {
 public:
  Tableau() = default;
  /// Rejects ragged fillings (row lengths must form a partition).
  explicit Tableau(std::vector<std::vector<int>> rows);

  const std::vector<std::vector<int>>& rows() const noexcept { return rows_; }
  Partition shape() const;
  int size() const noexcept;
  bool empty() const noexcept { return rows_.empty(); }
  /// T_{ij}, 1-based.
  int at(int row, int col) const { return rows_.at(row - 1).at(col - 1); }

  friend bool operator==(const Tableau&, const Tableau&) = default;
  friend auto operator<=>(const Tableau&, const Tableau&) = default;

 private:
  std::vector<std::vector<int>> rows_;
};

/// Filling of the skew diagram outer/inner.
class SkewTableau {
 public:
  SkewTableau() = default;
  /// `rows[i]` lists only the skew entries of row i+1 (outer_i - inner_i values).
  SkewTableau(Partition inner, std::vector<std::vector<int>> rows);
  /// T/mu: restriction of a straight tableau to the complement of mu.
  static SkewTableau restrict(const Tableau& t, const Partition& inner);

  const Partition& outer() const noexcept { return outer_; }
  const Partition& inner() const noexcept { return inner_; }
  /// Skew entries only, per row.
  std::vector<std::vector<int>> rows() const;
  bool in_skew(Cell c) const noexcept;
  /// Entry of a skew cell.
  int at(Cell c) const { return grid_.at(c.row - 1).at(c.col - 1); }
  /// Straight tableau; requires an empty inner shape.
  Tableau to_tableau() const;

  friend bool operator==(const SkewTableau&, const SkewTableau&) = default;

 private:
  friend SkewTableau jdt_slide(const SkewTableau&, Cell);
  friend SkewTableau reverse_slide(const SkewTableau&, Cell, int);
  Partition outer_;
  Partition inner_;
  // Full outer-shaped grid; cells of the inner shape hold 0.
  std::vector<std::vector<int>> grid_;
};

bool is_semistandard(const Tableau& t);
bool is_semistandard(const SkewTableau& t);
/// Semistandard with the last entry of row i at most phi_i.
bool is_flagged(const Tableau& t, const Flag& phi);

/// SSYT_phi(lambda) in lexicographic order of rows.
std::vector<Tableau> enumerate_flagged(const Partition& lambda, const Flag& phi);

/// One jeu de taquin slide into `inner_corner` (a corner of the inner shape).
SkewTableau jdt_slide(const SkewTableau& t, Cell inner_corner);

/// Reverse slide: an empty cell is added at the outer cell `outer_cell`
/// (which must extend the outer shape to a partition) and travels northwest
/// until it becomes a new inner corner. `fill` is unused and kept zero.
SkewTableau reverse_slide(const SkewTableau& t, Cell outer_cell, int fill = 0);

/// Rectification, sliding into the inner cells from the bottom-right of mu.
Tableau rect(const SkewTableau& t);

/// rect(T/(1)).
Tableau jdt(const Tableau& t);

/// Recovers T from jdt(T), the shape of T and the removed corner value.
Tableau jdt_inverse(const Tableau& rectified, const Partition& original_shape, int corner_value);

}  // namespace bpdkit
