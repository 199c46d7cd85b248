#include "bpdkit/schubert.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "bpdkit/bpd.hpp"
#include "bpdkit/pipedream.hpp"
#include "bpdkit/tableau.hpp"

namespace bpdkit {

namespace {

void trim(Exponent& e) {
  while (!e.empty() && e.back() == 0) e.pop_back();
}

int degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

// Exponent vector of x_{i_1} x_{i_2} ...
Exponent from_indices(const std::vector<int>& idx) {
  Exponent e;
  for (int i : idx) {
    if (i > static_cast<int>(e.size())) e.resize(i, 0);
    ++e[i - 1];
  }
  return e;
}

}  // namespace

SparsePolynomial SparsePolynomial::constant(std::int64_t c) {
  SparsePolynomial p;
  p.add({}, c);
  return p;
}

SparsePolynomial SparsePolynomial::monomial(Exponent e, std::int64_t c) {
  SparsePolynomial p;
  p.add(std::move(e), c);
  return p;
}

void SparsePolynomial::add(Exponent e, std::int64_t c) {
  for (int x : e)
    if (x < 0) throw Error(ErrorCode::InvalidArgument, "negative exponent");
  trim(e);
  if (c == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(std::move(e), c);
  } else if ((it->second += c) == 0) {
    terms_.erase(it);
  }
}

SparsePolynomial& SparsePolynomial::operator+=(const SparsePolynomial& other) {
  for (const auto& [e, c] : other.terms_) add(e, c);
  return *this;
}

std::int64_t SparsePolynomial::coefficient(Exponent e) const {
  trim(e);
  auto it = terms_.find(e);
  return it == terms_.end() ? 0 : it->second;
}

std::int64_t SparsePolynomial::coefficient_sum() const {
  std::int64_t s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

std::vector<std::pair<Exponent, std::int64_t>> SparsePolynomial::terms() const {
  std::vector<std::pair<Exponent, std::int64_t>> out(terms_.begin(), terms_.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    const int da = degree(a.first), db = degree(b.first);
    if (da != db) return da > db;
    return a.first > b.first;
  });
  return out;
}

std::string SparsePolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms()) {
    std::int64_t mag = c;
    if (first) {
      if (c < 0) {
        out += "-";
        mag = -c;
      }
    } else {
      out += c < 0 ? " - " : " + ";
      mag = c < 0 ? -c : c;
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(i + 1);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) out += std::to_string(mag);
    else if (mag == 1) out += mono;
    else out += std::to_string(mag) + "*" + mono;
  }
  return out;
}

SparsePolynomial SparsePolynomial::parse(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw Error(ErrorCode::InvalidArgument, "empty polynomial");
  SparsePolynomial p;
  std::size_t pos = 0;
  auto bad = [&] { return Error(ErrorCode::InvalidArgument, "cannot parse polynomial '" + text + "'"); };
  auto number = [&]() -> std::int64_t {
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) throw bad();
    return std::stoll(s.substr(start, pos - start));
  };
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (pos != 0) {
      throw bad();
    }
    std::int64_t coeff = 1;
    Exponent e;
    bool any = false;
    while (pos < s.size() && s[pos] != '+' && s[pos] != '-') {
      if (any) {
        if (s[pos] != '*') throw bad();
        ++pos;
      }
      if (pos < s.size() && s[pos] == 'x') {
        ++pos;
        const int var = static_cast<int>(number());
        if (var < 1) throw bad();
        int power = 1;
        if (pos < s.size() && s[pos] == '^') {
          ++pos;
          power = static_cast<int>(number());
        }
        if (var > static_cast<int>(e.size())) e.resize(var, 0);
        e[var - 1] += power;
      } else {
        coeff *= number();
      }
      any = true;
    }
    if (!any) throw bad();
    p.add(std::move(e), sign * coeff);
  }
  return p;
}

SparsePolynomial schubert_pd(const Permutation& w) {
  SparsePolynomial p;
  for (const auto& c : enumerate_compatible(w)) p.add(from_indices(c.rows), 1);
  return p;
}

SparsePolynomial schubert_bpd(const Permutation& w) {
  SparsePolynomial p;
  for (const auto& b : enumerate_bpd(w)) {
    std::vector<int> rows;
    for (const Cell& c : b.blanks()) rows.push_back(c.row);
    p.add(from_indices(rows), 1);
  }
  return p;
}

SparsePolynomial flagged_schur(const Permutation& v) {
  if (!is_vexillary(v)) throw Error(ErrorCode::NotVexillary, v.to_string() + " is not vexillary");
  SparsePolynomial p;
  for (const auto& t : enumerate_flagged(shape(v), flag(v))) {
    std::vector<int> entries;
    for (const auto& row : t.rows()) entries.insert(entries.end(), row.begin(), row.end());
    p.add(from_indices(entries), 1);
  }
  return p;
}

}  // namespace bpdkit
