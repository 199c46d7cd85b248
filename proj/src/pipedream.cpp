#include "bpdkit/pipedream.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace bpdkit {

CompatibleSequence CompatibleSequence::tail() const {
  if (rows.empty()) return *this;
  return {{rows.begin() + 1, rows.end()}, {letters.begin() + 1, letters.end()}};
}

const char* to_string(CompatibilityFailure f) {
  switch (f) {
    case CompatibilityFailure::None: return "ok";
    case CompatibilityFailure::LengthMismatch: return "length_mismatch";
    case CompatibilityFailure::NonPositive: return "non_positive";
    case CompatibilityFailure::NotReduced: return "not_reduced";
    case CompatibilityFailure::RowsDecrease: return "rows_decrease";
    case CompatibilityFailure::RowExceedsLetter: return "row_exceeds_letter";
    case CompatibilityFailure::RowsNotStrict: return "rows_not_strict";
    case CompatibilityFailure::WrongPermutation: return "wrong_permutation";
  }
  return "unknown";
}

CompatibilityCheck validate_compatible(const CompatibleSequence& c, const std::optional<Permutation>& w) {
  using F = CompatibilityFailure;
  if (c.rows.size() != c.letters.size()) return {F::LengthMismatch, 0};
  const int l = c.size();
  for (int k = 0; k < l; ++k)
    if (c.rows[k] < 1 || c.letters[k] < 1) return {F::NonPositive, k + 1};
  if (!is_reduced_word(c.letters)) return {F::NotReduced, 0};
  for (int k = 0; k + 1 < l; ++k)
    if (c.rows[k] > c.rows[k + 1]) return {F::RowsDecrease, k + 1};
  for (int k = 0; k < l; ++k)
    if (c.rows[k] > c.letters[k]) return {F::RowExceedsLetter, k + 1};
  for (int k = 0; k + 1 < l; ++k)
    if (c.letters[k] < c.letters[k + 1] && c.rows[k] >= c.rows[k + 1]) return {F::RowsNotStrict, k + 1};
  if (w && Permutation::from_word(c.letters) != *w) return {F::WrongPermutation, 0};
  return {};
}

Permutation biword_permutation(const CompatibleSequence& c) { return Permutation::from_word(c.letters); }

PipeDream::PipeDream(int n, std::vector<Cell> crosses) : n_(n), crosses_(std::move(crosses)) {
  if (n_ < 1) throw Error(ErrorCode::InvalidPipeDream, "staircase size must be positive");
  std::sort(crosses_.begin(), crosses_.end());
  crosses_.erase(std::unique(crosses_.begin(), crosses_.end()), crosses_.end());
  for (const Cell& c : crosses_)
    if (c.row < 1 || c.col < 1 || c.row + c.col > n_)
      throw Error(ErrorCode::InvalidPipeDream, "cross outside the staircase");
}

bool PipeDream::has_cross(Cell c) const { return std::binary_search(crosses_.begin(), crosses_.end(), c); }

namespace {

struct Trace {
  std::vector<int> exit_row_label;  // label of the pipe leaving row i, index i-1
  std::map<Cell, std::pair<int, int>> cross_pipes;
};

Trace trace(const PipeDream& p) {
  const int n = p.n();
  Trace t;
  t.exit_row_label.assign(n, 0);
  for (int label = 1; label <= n; ++label) {
    int row = 1, col = label;
    bool from_top = true;
    while (col >= 1) {
      const Cell here{row, col};
      if (row + col > n) {
        // closing elbow: top -> left
        --col;
        from_top = false;
      } else if (p.has_cross(here)) {
        auto& pr = t.cross_pipes[here];
        if (from_top) pr.first = label;
        else pr.second = label;
        if (from_top) ++row;
        else --col;
      } else if (from_top) {
        --col;
        from_top = false;
      } else {
        ++row;
        from_top = true;
      }
      if (col == 0) t.exit_row_label[row - 1] = label;
    }
  }
  return t;
}

}  // namespace

Permutation pd_permutation(const PipeDream& p) { return Permutation(trace(p).exit_row_label); }

std::vector<std::pair<int, int>> pd_crossing_pairs(const PipeDream& p) {
  const Trace t = trace(p);
  std::vector<std::pair<int, int>> out;
  for (const Cell& c : p.crosses()) {
    auto [a, b] = t.cross_pipes.at(c);
    out.emplace_back(std::min(a, b), std::max(a, b));
  }
  return out;
}

bool is_reduced(const PipeDream& p) {
  auto pairs = pd_crossing_pairs(p);
  std::sort(pairs.begin(), pairs.end());
  return std::adjacent_find(pairs.begin(), pairs.end()) == pairs.end();
}

CompatibleSequence pd_to_biword(const PipeDream& p) {
  if (!is_reduced(p)) throw Error(ErrorCode::InvalidPipeDream, "pipe dream is not reduced");
  std::vector<Cell> order = p.crosses();
  std::sort(order.begin(), order.end(), [](Cell a, Cell b) {
    return a.row != b.row ? a.row < b.row : a.col > b.col;
  });
  CompatibleSequence c;
  for (const Cell& x : order) {
    c.rows.push_back(x.row);
    c.letters.push_back(x.col + x.row - 1);
  }
  return c;
}

PipeDream biword_to_pd(const CompatibleSequence& c, int n) {
  const auto check = validate_compatible(c);
  if (!check) throw Error(ErrorCode::InvalidBiword, std::string("biword violates ") + to_string(check.failure));
  int need = 1;
  for (int a : c.letters) need = std::max(need, a + 1);
  std::vector<Cell> crosses;
  for (int k = 0; k < c.size(); ++k) crosses.push_back({c.rows[k], c.letters[k] - c.rows[k] + 1});
  return PipeDream(std::max(need, n), std::move(crosses));
}

namespace {

struct PdSearch {
  int n;
  int target_length;
  std::vector<int> w_inverse;  // w^{-1}(value), 1-based values
  std::vector<Cell> cells;     // reading order
  std::vector<int> u;          // current prefix product, 0-based window
  CompatibleSequence current;
  std::vector<CompatibleSequence> out;

  void run(std::size_t idx) {
    if (current.size() == target_length) {
      out.push_back(current);
      return;
    }
    if (idx == cells.size()) return;
    if (static_cast<int>(cells.size() - idx) < target_length - current.size()) return;
    const Cell c = cells[idx];
    const int a = c.row + c.col - 1;
    const int x = u[a - 1], y = u[a];
    // Adding s_a must create the value inversion (x, y) and keep it inside Inv(w).
    if (x < y && w_inverse[x] > w_inverse[y]) {
      std::swap(u[a - 1], u[a]);
      current.rows.push_back(c.row);
      current.letters.push_back(a);
      run(idx + 1);
      current.rows.pop_back();
      current.letters.pop_back();
      std::swap(u[a - 1], u[a]);
    }
    run(idx + 1);
  }
};

}  // namespace

std::vector<CompatibleSequence> enumerate_compatible(const Permutation& w) {
  PdSearch s;
  s.n = std::max(w.size(), 1);
  s.target_length = length(w);
  const auto inv = w.inverse().window(s.n);
  s.w_inverse.assign(s.n + 1, 0);
  for (int v = 1; v <= s.n; ++v) s.w_inverse[v] = inv[v - 1];
  for (int r = 1; r < s.n; ++r)
    for (int c = s.n - r; c >= 1; --c) s.cells.push_back({r, c});
  s.u.resize(s.n);
  for (int k = 0; k < s.n; ++k) s.u[k] = k + 1;
  s.run(0);
  std::sort(s.out.begin(), s.out.end());
  return s.out;
}

std::vector<PipeDream> enumerate_pd(const Permutation& w) {
  const int n = std::max(w.size(), 1);
  std::vector<PipeDream> out;
  for (const auto& c : enumerate_compatible(w)) out.push_back(biword_to_pd(c, n));
  return out;
}

std::string render_ascii(const PipeDream& p) {
  std::ostringstream os;
  const int n = p.n();
  for (int r = 1; r <= n; ++r) {
    for (int c = 1; c + r <= n + 1; ++c) {
      if (r + c == n + 1) os << '/';
      else os << (p.has_cross({r, c}) ? '+' : '.');
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace bpdkit
