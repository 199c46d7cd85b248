#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bpdkit/common.hpp"
#include "bpdkit/permutation.hpp"

namespace bpdkit {

/// Biword (r_1..r_l ; a_1..a_l). Only a reduced compatible sequence is a
/// pipe dream, but the type itself is just the pair of lists.
struct CompatibleSequence {
  std::vector<int> rows;
  std::vector<int> letters;

  int size() const noexcept { return static_cast<int>(rows.size()); }
  /// Drops the first column of the biword.
  CompatibleSequence tail() const;

  friend bool operator==(const CompatibleSequence&, const CompatibleSequence&) = default;
  friend auto operator<=>(const CompatibleSequence&, const CompatibleSequence&) = default;
};

/// Which defining condition a biword violates.
enum class CompatibilityFailure {
  None,
  LengthMismatch,
  NonPositive,
  NotReduced,         // (i)
  RowsDecrease,       // (ii)
  RowExceedsLetter,   // (iii)
  RowsNotStrict,      // (iv)
  WrongPermutation,
};

const char* to_string(CompatibilityFailure f);

struct CompatibilityCheck {
  CompatibilityFailure failure = CompatibilityFailure::None;
  int index = 0;  // 1-based position where the failure was detected

  bool ok() const noexcept { return failure == CompatibilityFailure::None; }
  explicit operator bool() const noexcept { return ok(); }
};

CompatibilityCheck validate_compatible(const CompatibleSequence& c,
                                       const std::optional<Permutation>& w = std::nullopt);

/// Product s_{a_1} ... s_{a_l} of the letters.
Permutation biword_permutation(const CompatibleSequence& c);

/// Cross tiles in the staircase of size n; every other staircase cell is a bump.
class PipeDream {
 public:
  PipeDream() = default;
  /// Throws ErrorCode::InvalidPipeDream unless every cross satisfies row + col <= n.
  PipeDream(int n, std::vector<Cell> crosses);

  int n() const noexcept { return n_; }
  const std::vector<Cell>& crosses() const noexcept { return crosses_; }
  bool has_cross(Cell c) const;

  friend bool operator==(const PipeDream&, const PipeDream&) = default;
  friend auto operator<=>(const PipeDream&, const PipeDream&) = default;

 private:
  int n_ = 1;
  std::vector<Cell> crosses_;
};

/// Exit order of the pipes (pipe entering column j exits row i means w(i) = j).
Permutation pd_permutation(const PipeDream& p);

/// No two pipes cross more than once.
bool is_reduced(const PipeDream& p);

/// Pair of pipe labels (smaller first) meeting at each cross tile, in cross order.
std::vector<std::pair<int, int>> pd_crossing_pairs(const PipeDream& p);

/// Reads crosses right-to-left within a row, rows top-to-bottom;
/// cross (i,j) becomes the pair (i ; i+j-1). Requires a reduced pipe dream.
CompatibleSequence pd_to_biword(const PipeDream& p);

/// Inverse of pd_to_biword in the smallest staircase that fits the letters
/// (or size `n` when larger). Throws InvalidBiword on a non-compatible biword.
PipeDream biword_to_pd(const CompatibleSequence& c, int n = 0);

/// All reduced pipe dreams of w in the staircase of size max(w.size(), 1),
/// sorted by their biwords.
std::vector<PipeDream> enumerate_pd(const Permutation& w);

/// Same set, as biwords.
std::vector<CompatibleSequence> enumerate_compatible(const Permutation& w);

/// Staircase drawing: '+' cross, '.' bump, '/' for the elbows closing each row.
std::string render_ascii(const PipeDream& p);

}  // namespace bpdkit
