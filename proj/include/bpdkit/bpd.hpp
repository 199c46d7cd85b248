#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bpdkit/common.hpp"
#include "bpdkit/permutation.hpp"
#include "bpdkit/tableau.hpp"

namespace bpdkit {

/// Tile alphabet. 'r' joins the bottom and right edges, 'j' joins the top
/// and left edges; 'b' is the bump tile of an almost bumpless pipe dream
/// (an r-turn and a j-turn sharing one cell).
enum class Tile : char {
  Blank = '.',
  Vertical = '|',
  Horizontal = '-',
  R = 'r',
  J = 'j',
  Cross = '+',
  Bump = 'b',
};

bool is_tile_char(char c) noexcept;

/// n x n tile grid, row 1 on top. Construction only checks the alphabet and
/// the shape; use validate_bpd for the pipe conditions.
class BumplessPipeDream {
 public:
  BumplessPipeDream() = default;
  explicit BumplessPipeDream(std::vector<std::string> rows);

  int n() const noexcept { return static_cast<int>(rows_.size()); }
  const std::vector<std::string>& rows() const noexcept { return rows_; }
  Tile at(Cell c) const { return static_cast<Tile>(rows_.at(c.row - 1).at(c.col - 1)); }
  Tile at(int row, int col) const { return at(Cell{row, col}); }
  void set(Cell c, Tile t) { rows_.at(c.row - 1).at(c.col - 1) = static_cast<char>(t); }
  bool contains(Cell c) const noexcept { return c.row >= 1 && c.col >= 1 && c.row <= n() && c.col <= n(); }

  std::vector<Cell> cells_of(Tile t) const;
  std::vector<Cell> blanks() const { return cells_of(Tile::Blank); }

  friend bool operator==(const BumplessPipeDream&, const BumplessPipeDream&) = default;
  friend auto operator<=>(const BumplessPipeDream&, const BumplessPipeDream&) = default;

 private:
  std::vector<std::string> rows_;
};

/// Alias used where a single bump tile is allowed.
using AlmostBPD = BumplessPipeDream;

enum class BpdFailure {
  None,
  Empty,
  BoundaryMismatch,  // pipe on the top or left edge, or missing on the bottom or right edge
  EdgeMismatch,      // neighbouring tiles disagree on a shared edge
  DoubleCrossing,
  HasBump,
  TooManyBumps,
};

const char* to_string(BpdFailure f);

struct BpdCheck {
  BpdFailure failure = BpdFailure::None;
  Cell where{};

  bool ok() const noexcept { return failure == BpdFailure::None; }
  explicit operator bool() const noexcept { return ok(); }
};

/// Full validity check. With `allow_bump`, at most one bump tile is accepted.
BpdCheck validate_bpd(const BumplessPipeDream& b, bool allow_bump = false);

/// Row i holds the label of the pipe exiting row i (pipe j enters below column j).
/// Throws InvalidBpd when the grid does not route.
Permutation bpd_permutation(const BumplessPipeDream& b);

/// Cells visited by each pipe, from its entry at the bottom to its exit on
/// the right. Index j-1 holds pipe j.
struct Routing {
  int n = 0;
  std::vector<std::vector<Cell>> paths;

  /// Label of the pipe entering `c` from below (or from the left when
  /// `from_below` is false); 0 when there is none.
  int pipe_at(Cell c, bool from_below = true) const;
  /// Position of `c` on pipe `label`'s path, or -1.
  int index_on(int label, Cell c) const;
};

/// Throws InvalidBpd when the grid does not route.
Routing route(const BumplessPipeDream& b);
/// Rebuilds tiles from paths; throws InvalidBpd on incompatible overlaps.
BumplessPipeDream tiles_of(const Routing& r);

/// Pairs of pipe labels (smaller first) meeting at each cross tile, row-major.
std::vector<std::pair<int, int>> bpd_crossing_pairs(const BumplessPipeDream& b);

/// The BPD of w with r-tiles at (i, w(i)); its blank tiles are D_w.
BumplessPipeDream rothe_bpd(const Permutation& w, int n = 0);

/// BPD(w) in an n x n grid (n defaults to the window size), sorted by rows.
std::vector<BumplessPipeDream> enumerate_bpd(const Permutation& w, int n = 0);

/// Reroutes one path: the segment from (k,j) up to (i,j) then right to (i,l)
/// becomes (k,j) right to (k,l) then up to (i,l). Throws DroopUnavailable
/// when the path does not contain that segment.
void droop_path(std::vector<Cell>& path, Cell from, Cell to);
/// Inverse of droop_path.
void undroop_path(std::vector<Cell>& path, Cell from, Cell to);

bool droop_available(const BumplessPipeDream& b, Cell from, Cell to);
/// Droop from the r-tile `from` into the blank `to`.
BumplessPipeDream droop(const BumplessPipeDream& b, Cell from, Cell to);
/// Inverse droop: `from` is the j-tile of the drooped pipe, `to` the blank
/// that becomes its r-tile again.
BumplessPipeDream undroop(const BumplessPipeDream& b, Cell from, Cell to);
std::vector<std::pair<Cell, Cell>> available_droops(const BumplessPipeDream& b);

/// Weigandt's map to flagged tableaux. Requires v vexillary and b in BPD(v).
Tableau gamma(const BumplessPipeDream& b, const Permutation& v);

/// The unique B in BPD(v) (n x n grid, default the window size) with
/// gamma(B, v) = t. With `by_lookup` the answer is found by searching
/// enumerate_bpd(v, n) instead of being rebuilt.
BumplessPipeDream gamma_inverse(const Tableau& t, const Permutation& v, int n = 0, bool by_lookup = false);

/// Grows b to m x m; the new pipes m'>n run straight up to the diagonal.
BumplessPipeDream embed(const BumplessPipeDream& b, int m);

}  // namespace bpdkit
