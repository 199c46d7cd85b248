#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace bpdkit {

/// Statements the harness can check exhaustively over S_n.
enum class Theorem {
  Grassmannian,  // gamma = Q o phi on Grassmannian w
  Main,          // gamma = Q o phi on vexillary v
  Lenart,        // Q is a bijection PD(v) -> flagged tableaux
  JdtNabla,      // jdt(gamma(B)) = gamma(nabla B), Grassmannian w
  Canonical,     // L_ij o phi = phi o H_ij
  QInvariance,  // Q is unchanged by Little bumps
  Recording,     // LS(B) = Q(phi(B))
  Schubert,      // the three polynomial formulas agree
};

const char* to_string(Theorem t);
/// Accepts the ids grassmannian, main, lenart, huangcor, canonical, hy,
/// recording, schubert.
std::optional<Theorem> parse_theorem(const std::string& id);
std::vector<Theorem> all_theorems();

struct VerifyReport {
  std::string theorem;
  int n_min = 1;
  int n_max = 1;
  long long cases = 0;
  std::vector<nlohmann::json> failures;  // counterexamples
  double seconds = 0.0;
  bool pass = true;
};

void to_json(nlohmann::json& j, const VerifyReport& r);

/// Checks the statement for every permutation of S_n (windows up to n),
/// spread over `threads` workers (0 picks the hardware count). At most
/// `max_failures` counterexamples are kept; all are counted.
VerifyReport verify(Theorem t, int n, unsigned threads = 0, std::size_t max_failures = 20);

}  // namespace bpdkit
