#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "bpdkit/permutation.hpp"

namespace bpdkit {

using Exponent = std::vector<int>;

/// Integer polynomial in x1, x2, ...; exponent vectors carry no trailing
/// zeros and zero coefficients are never stored.
class SparsePolynomial {
 public:
  SparsePolynomial() = default;
  static SparsePolynomial constant(std::int64_t c);
  static SparsePolynomial monomial(Exponent e, std::int64_t c = 1);

  void add(Exponent e, std::int64_t c);
  SparsePolynomial& operator+=(const SparsePolynomial& other);

  std::int64_t coefficient(Exponent e) const;
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t num_terms() const noexcept { return terms_.size(); }
  /// Sum of all coefficients, i.e. the value at x = (1, 1, ...).
  std::int64_t coefficient_sum() const;

  /// Terms in graded lexicographic order: higher degree first, then
  /// lexicographically larger exponent first.
  std::vector<std::pair<Exponent, std::int64_t>> terms() const;

  /// "x1^2*x2 + 2*x1*x3 - x2", "0" for the zero polynomial.
  std::string to_string() const;
  /// Reads the output of to_string; throws InvalidArgument.
  static SparsePolynomial parse(const std::string& text);

  friend bool operator==(const SparsePolynomial&, const SparsePolynomial&) = default;

 private:
  std::map<Exponent, std::int64_t> terms_;
};

/// Sum over the compatible sequences of w of x_{r_1} ... x_{r_l}.
SparsePolynomial schubert_pd(const Permutation& w);
/// Sum over BPD(w) of the product of x_i over blank tiles in row i.
SparsePolynomial schubert_bpd(const Permutation& w);
/// Sum over flagged tableaux of shape lambda(v), flag phi(v), of x^T.
/// Throws NotVexillary.
SparsePolynomial flagged_schur(const Permutation& v);

}  // namespace bpdkit
