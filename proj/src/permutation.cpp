#include "bpdkit/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>
#include <numeric>
#include <sstream>

namespace bpdkit {

Permutation::Permutation(std::vector<int> one_line) : window_(std::move(one_line)) {
  const int n = size();
  std::vector<bool> seen(n + 1, false);
  for (int v : window_) {
    if (v < 1 || v > n || seen[v])
      throw Error(ErrorCode::InvalidPermutation, "window is not a rearrangement of 1..n");
    seen[v] = true;
  }
  while (!window_.empty() && window_.back() == static_cast<int>(window_.size())) window_.pop_back();
}

Permutation Permutation::simple(int a) {
  if (a < 1) throw Error(ErrorCode::InvalidArgument, "simple transposition index must be positive");
  return identity().times_simple(a);
}

Permutation Permutation::from_word(std::span<const int> word) {
  int n = 0;
  for (int a : word) {
    if (a < 1) throw Error(ErrorCode::InvalidArgument, "letters must be positive");
    n = std::max(n, a + 1);
  }
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  for (int a : word) std::swap(w[a - 1], w[a]);
  return Permutation(std::move(w));
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> w;
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.find(',') == std::string_view::npos) {
    for (char ch : text) {
      if (ch < '1' || ch > '9')
        throw Error(ErrorCode::InvalidPermutation, "bad one-line digit in '" + std::string(text) + "'");
      w.push_back(ch - '0');
    }
  } else {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      auto next = text.find(',', pos);
      if (next == std::string_view::npos) next = text.size();
      auto tok = trim(text.substr(pos, next - pos));
      int v = 0;
      auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (ec != std::errc{} || p != tok.data() + tok.size())
        throw Error(ErrorCode::InvalidPermutation, "bad entry '" + std::string(tok) + "'");
      w.push_back(v);
      pos = next + 1;
    }
  }
  return Permutation(std::move(w));
}

std::vector<int> Permutation::window(int n) const {
  std::vector<int> out = window_;
  for (int k = size() + 1; k <= n; ++k) out.push_back(k);
  return out;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(size());
  for (int k = 1; k <= size(); ++k) inv[window_[k - 1] - 1] = k;
  return Permutation(std::move(inv));
}

Permutation Permutation::compose(const Permutation& other) const {
  const int n = std::max(size(), other.size());
  std::vector<int> out(n);
  for (int k = 1; k <= n; ++k) out[k - 1] = (*this)(other(k));
  return Permutation(std::move(out));
}

Permutation Permutation::times_simple(int a) const { return swap_positions(a, a + 1); }

Permutation Permutation::simple_times(int a) const { return swap_values(a, a + 1); }

Permutation Permutation::swap_positions(int i, int j) const {
  if (i < 1 || j < 1) throw Error(ErrorCode::InvalidArgument, "positions must be positive");
  std::vector<int> w = window(std::max({size(), i, j}));
  std::swap(w[i - 1], w[j - 1]);
  return Permutation(std::move(w));
}

Permutation Permutation::swap_values(int i, int j) const {
  if (i < 1 || j < 1) throw Error(ErrorCode::InvalidArgument, "values must be positive");
  std::vector<int> w = window(std::max({size(), i, j}));
  for (int& v : w) {
    if (v == i) v = j;
    else if (v == j) v = i;
  }
  return Permutation(std::move(w));
}

std::string Permutation::to_string() const {
  if (window_.empty()) return "1";
  const bool small = size() <= 9;
  std::ostringstream os;
  for (int k = 0; k < size(); ++k) {
    if (!small && k > 0) os << ',';
    os << window_[k];
  }
  return os.str();
}

int length(const Permutation& w) {
  const auto c = code(w);
  return std::accumulate(c.begin(), c.end(), 0);
}

std::vector<int> code(const Permutation& w) {
  const int n = w.size();
  std::vector<int> c(n, 0);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (w(i) > w(j)) ++c[i - 1];
  return c;
}

Partition shape(const Permutation& w) {
  auto c = code(w);
  std::sort(c.begin(), c.end(), std::greater<>());
  return Partition(std::move(c));
}

std::vector<int> descents(const Permutation& w) {
  std::vector<int> d;
  for (int k = 1; k < w.size(); ++k)
    if (w(k) > w(k + 1)) d.push_back(k);
  return d;
}

bool is_grassmannian(const Permutation& w) { return descents(w).size() <= 1; }

bool is_vexillary(const Permutation& w) {
  const int n = w.size();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      if (!(w(j) < w(i))) continue;
      for (int k = j + 1; k <= n; ++k) {
        if (!(w(i) < w(k))) continue;
        for (int l = k + 1; l <= n; ++l)
          if (w(i) < w(l) && w(l) < w(k)) return false;
      }
    }
  return true;
}

std::vector<Cell> rothe_diagram(const Permutation& w) {
  std::vector<Cell> d;
  const int n = w.size();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (w(i) > w(j)) d.push_back({i, w(j)});
  std::sort(d.begin(), d.end());
  return d;
}

Flag flag(const Permutation& v) {
  if (!is_vexillary(v)) throw Error(ErrorCode::NotVexillary, v.to_string() + " contains 2143");
  const Partition lambda = shape(v);
  const auto diagram = rothe_diagram(v);
  Flag phi;
  for (int i = 1; i <= lambda.num_parts(); ++i) {
    const int diag = lambda.part(i) - i;
    int best = 0;
    for (const Cell& c : diagram)
      if (c.col - c.row == diag) best = std::max(best, c.row);
    if (best == 0)
      throw Error(ErrorCode::NotVexillary, "no diagram cell on the diagonal of row " + std::to_string(i));
    phi.bounds.push_back(best);
  }
  return phi;
}

Partition rothe_hull(const Permutation& w) {
  const auto diagram = rothe_diagram(w);
  int rows = 0;
  for (const Cell& c : diagram) rows = std::max(rows, c.row);
  std::vector<int> parts(rows, 0);
  for (const Cell& c : diagram) parts[c.row - 1] = std::max(parts[c.row - 1], c.col);
  for (int r = rows - 2; r >= 0; --r) parts[r] = std::max(parts[r], parts[r + 1]);
  return Partition(std::move(parts));
}

TranspositionResult apply_transposition(const Permutation& w, int i, int j) {
  if (i == j) throw Error(ErrorCode::InvalidArgument, "transposition needs i != j");
  if (i > j) std::swap(i, j);
  TranspositionResult r{w.swap_positions(i, j), 0, false};
  r.length_delta = length(r.result) - length(w);
  r.covers = r.length_delta == -1;
  return r;
}

bool is_reduced_word(std::span<const int> word) {
  int n = 0;
  for (int a : word) {
    if (a < 1) return false;
    n = std::max(n, a + 1);
  }
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  for (int a : word) {
    if (w[a - 1] > w[a]) return false;
    std::swap(w[a - 1], w[a]);
  }
  return true;
}

namespace {

void collect_words(const Permutation& w, ReducedWord& suffix, std::vector<ReducedWord>& out) {
  if (w.is_identity()) {
    out.emplace_back(suffix.rbegin(), suffix.rend());
    return;
  }
  for (int d : descents(w)) {
    suffix.push_back(d);
    collect_words(w.times_simple(d), suffix, out);
    suffix.pop_back();
  }
}

}  // namespace

std::vector<ReducedWord> reduced_words(const Permutation& w) {
  std::vector<ReducedWord> out;
  ReducedWord suffix;
  collect_words(w, suffix, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

}  // namespace bpdkit
