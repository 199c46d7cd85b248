#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bpdkit/common.hpp"
#include "bpdkit/partition.hpp"

namespace bpdkit {

/// A finitely supported bijection of the positive integers.
///
/// Stored as a one-line window w(1)..w(n) with trailing fixed points trimmed,
/// so two permutations compare equal exactly when they agree everywhere.
class Permutation {
 public:
  /// The identity.
  Permutation() = default;
  /// Throws ErrorCode::InvalidPermutation unless `one_line` rearranges 1..n.
  explicit Permutation(std::vector<int> one_line);

  static Permutation identity() { return {}; }
  /// Simple transposition s_a (swaps a and a+1).
  static Permutation simple(int a);
  /// Product s_{a_1} s_{a_2} ... s_{a_p}.
  static Permutation from_word(std::span<const int> word);
  /// "35142" for windows over 1..9; comma separated ("1,10,2,...") otherwise.
  static Permutation parse(std::string_view text);

  /// w(k); k beyond the window is fixed.
  int operator()(int k) const noexcept {
    return k >= 1 && k <= size() ? window_[k - 1] : k;
  }
  /// Trimmed window length (0 for the identity).
  int size() const noexcept { return static_cast<int>(window_.size()); }
  const std::vector<int>& window() const noexcept { return window_; }
  /// Window padded with fixed points to length n (n >= size()).
  std::vector<int> window(int n) const;
  bool is_identity() const noexcept { return window_.empty(); }

  Permutation inverse() const;
  /// Composition (*this) o other, i.e. k -> this(other(k)).
  Permutation compose(const Permutation& other) const;
  /// w s_a: swaps positions a and a+1.
  Permutation times_simple(int a) const;
  /// s_a w: swaps values a and a+1.
  Permutation simple_times(int a) const;
  /// w t_{ij}: swaps positions i and j.
  Permutation swap_positions(int i, int j) const;
  /// t_{ij} w: swaps values i and j.
  Permutation swap_values(int i, int j) const;

  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> window_;
};

using ReducedWord = std::vector<int>;

int length(const Permutation& w);
std::vector<int> code(const Permutation& w);
Partition shape(const Permutation& w);
std::vector<int> descents(const Permutation& w);
bool is_grassmannian(const Permutation& w);
bool is_vexillary(const Permutation& w);

/// D_w = {(i, w(j)) : i < j, w(i) > w(j)}, sorted row-major.
std::vector<Cell> rothe_diagram(const Permutation& w);

/// Row of the southeast-most cell of D_v on the diagonal of (i, lambda_i).
Flag flag(const Permutation& v);

/// Smallest partition whose Young diagram contains D_w.
Partition rothe_hull(const Permutation& w);

struct TranspositionResult {
  Permutation result;
  int length_delta = 0;
  /// True exactly when the length dropped by one.
  bool covers = false;
};

/// w t_{ij} (position swap) together with the change in length.
TranspositionResult apply_transposition(const Permutation& w, int i, int j);

bool is_reduced_word(std::span<const int> word);

/// All reduced words of w in lexicographic order.
std::vector<ReducedWord> reduced_words(const Permutation& w);

/// Every permutation of S_n in lexicographic order of windows.
std::vector<Permutation> all_permutations(int n);

}  // namespace bpdkit
