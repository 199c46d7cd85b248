#include "bpdkit/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <set>
#include <thread>

#include "bpdkit/bijections.hpp"
#include "bpdkit/insertion.hpp"
#include "bpdkit/io.hpp"
#include "bpdkit/schubert.hpp"

namespace bpdkit {

namespace {

struct Outcome {
  long long cases = 0;
  std::vector<json> failures;
  long long failed = 0;
};

std::vector<std::pair<int, int>> legal_pairs(const Permutation& w) {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= w.size(); ++i)
    for (int j = i + 1; j <= w.size(); ++j)
      if (bump_guard(w, i, j)) out.emplace_back(i, j);
  return out;
}

void fail(Outcome& o, json blob) {
  ++o.failed;
  o.failures.push_back(std::move(blob));
}

void check_gamma_q(const Permutation& w, Outcome& o) {
  for (const auto& b : enumerate_bpd(w)) {
    ++o.cases;
    const Tableau g = gamma(b, w);
    const Tableau q = q_tableau(phi(b));
    if (g != q) fail(o, {{"perm", w}, {"bpd", b}, {"gamma", g}, {"q", q}});
  }
}

void check_one(Theorem t, const Permutation& w, Outcome& o) {
  switch (t) {
    case Theorem::Grassmannian:
      if (is_grassmannian(w)) check_gamma_q(w, o);
      break;
    case Theorem::Main:
      if (is_vexillary(w)) check_gamma_q(w, o);
      break;
    case Theorem::Lenart: {
      if (!is_vexillary(w)) break;
      ++o.cases;
      std::set<Tableau> image;
      std::size_t count = 0;
      for (const auto& c : enumerate_compatible(w)) {
        image.insert(q_tableau(c));
        ++count;
      }
      const auto flagged = enumerate_flagged(shape(w), flag(w));
      const std::set<Tableau> expected(flagged.begin(), flagged.end());
      if (image.size() != count || image != expected)
        fail(o, {{"perm", w}, {"pipe_dreams", count}, {"distinct_images", image.size()}, {"flagged", expected.size()}});
      break;
    }
    case Theorem::JdtNabla:
      if (!is_grassmannian(w) || w.is_identity()) break;
      for (const auto& b : enumerate_bpd(w)) {
        ++o.cases;
        const PopResult p = pop_nabla(b);
        const Tableau lhs = jdt(gamma(b, w));
        const Tableau rhs = gamma(p.next, bpd_permutation(p.next));
        if (lhs != rhs) fail(o, {{"perm", w}, {"bpd", b}, {"jdt_gamma", lhs}, {"gamma_nabla", rhs}});
      }
      break;
    case Theorem::Canonical: {
      const auto pairs = legal_pairs(w);
      for (const auto& b : enumerate_bpd(w)) {
        const auto c = phi(b);
        for (auto [i, j] : pairs) {
          ++o.cases;
          const auto lhs = little_bump(c, i, j);
          const auto h = huang_bump(b, i, j);
          const auto rhs = phi(h);
          if (lhs != rhs) fail(o, {{"perm", w}, {"bpd", b}, {"i", i}, {"j", j}, {"little", lhs}, {"phi_huang", rhs}});
        }
      }
      break;
    }
    case Theorem::QInvariance: {
      const auto pairs = legal_pairs(w);
      for (const auto& c : enumerate_compatible(w)) {
        const Tableau q = q_tableau(c);
        for (auto [i, j] : pairs) {
          ++o.cases;
          const auto out = little_bump(c, i, j);
          if (q_tableau(out) != q) fail(o, {{"perm", w}, {"biword", c}, {"i", i}, {"j", j}, {"bumped", out}});
        }
      }
      break;
    }
    case Theorem::Recording:
      for (const auto& b : enumerate_bpd(w)) {
        ++o.cases;
        const auto ls = ls_recording(b);
        const Tableau q = q_tableau(phi(b));
        if (ls.tableau != q) fail(o, {{"perm", w}, {"bpd", b}, {"ls", ls.tableau}, {"q", q}});
      }
      break;
    case Theorem::Schubert: {
      ++o.cases;
      const auto pd = schubert_pd(w);
      const auto bpd = schubert_bpd(w);
      if (pd != bpd) fail(o, {{"perm", w}, {"pd", pd}, {"bpd", bpd}});
      if (is_vexillary(w)) {
        const auto fs = flagged_schur(w);
        if (fs != pd) fail(o, {{"perm", w}, {"pd", pd}, {"flagged", fs}});
      }
      break;
    }
  }
}

}  // namespace

const char* to_string(Theorem t) {
  switch (t) {
    case Theorem::Grassmannian: return "grassmannian";
    case Theorem::Main: return "main";
    case Theorem::Lenart: return "lenart";
    case Theorem::JdtNabla: return "huangcor";
    case Theorem::Canonical: return "canonical";
    case Theorem::QInvariance: return "hy";
    case Theorem::Recording: return "recording";
    case Theorem::Schubert: return "schubert";
  }
  return "unknown";
}

std::vector<Theorem> all_theorems() {
  return {Theorem::Grassmannian, Theorem::Main,         Theorem::Lenart,    Theorem::JdtNabla,
          Theorem::Canonical,    Theorem::QInvariance, Theorem::Recording, Theorem::Schubert};
}

std::optional<Theorem> parse_theorem(const std::string& id) {
  for (Theorem t : all_theorems())
    if (id == to_string(t)) return t;
  return std::nullopt;
}

void to_json(nlohmann::json& j, const VerifyReport& r) {
  j = {{"theorem", r.theorem}, {"n_min", r.n_min},       {"n_max", r.n_max}, {"cases", r.cases},
       {"failures", r.failures}, {"seconds", r.seconds}, {"pass", r.pass}};
}

VerifyReport verify(Theorem t, int n, unsigned threads, std::size_t max_failures) {
  max_failures = std::max<std::size_t>(max_failures, 1);
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "n must be positive");
  const auto start = std::chrono::steady_clock::now();
  const auto perms = all_permutations(n);
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(perms.size()));

  std::atomic<std::size_t> next{0};
  std::mutex mu;
  Outcome total;
  auto worker = [&] {
    Outcome local;
    for (std::size_t k; (k = next.fetch_add(1)) < perms.size();) {
      try {
        check_one(t, perms[k], local);
      } catch (const std::exception& e) {
        fail(local, {{"perm", perms[k]}, {"error", e.what()}});
      }
    }
    std::lock_guard<std::mutex> lock(mu);
    total.cases += local.cases;
    total.failed += local.failed;
    for (auto& f : local.failures)
      if (total.failures.size() < max_failures) total.failures.push_back(std::move(f));
  };
  std::vector<std::thread> pool;
  for (unsigned k = 0; k < threads; ++k) pool.emplace_back(worker);
  for (auto& th : pool) th.join();

  VerifyReport r;
  r.theorem = to_string(t);
  r.n_min = 1;
  r.n_max = n;
  r.cases = total.cases;
  r.failures = std::move(total.failures);
  r.pass = total.failed == 0;
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace bpdkit
