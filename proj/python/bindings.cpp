// Python module bpdkit._bpdkit. Objects cross the boundary as plain lists:
// BPDs as row strings, biwords as (rows, letters), tableaux as nested lists.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bpdkit/bijections.hpp"
#include "bpdkit/insertion.hpp"
#include "bpdkit/io.hpp"
#include "bpdkit/render.hpp"
#include "bpdkit/schubert.hpp"
#include "bpdkit/verify.hpp"

namespace py = pybind11;
using namespace bpdkit;

namespace {

using Biword = std::pair<std::vector<int>, std::vector<int>>;
using Rows = std::vector<std::vector<int>>;

Biword to_py(const CompatibleSequence& c) { return {c.rows, c.letters}; }
CompatibleSequence from_py(const Biword& b) { return {b.first, b.second}; }

Rows rows_of(const Tableau& t) { return t.rows(); }

}  // namespace

PYBIND11_MODULE(_bpdkit, m) {
  m.doc() = "Pipe dreams, bumpless pipe dreams and the bijections between them";

  py::register_exception<Error>(m, "BpdkitError", PyExc_ValueError);

  m.def("permutation_length", [](const std::string& w) { return length(Permutation::parse(w)); });
  m.def("is_vexillary", [](const std::string& w) { return is_vexillary(Permutation::parse(w)); });
  m.def("is_grassmannian", [](const std::string& w) { return is_grassmannian(Permutation::parse(w)); });

  m.def("enumerate_bpd", [](const std::string& w) {
    std::vector<std::vector<std::string>> out;
    for (const auto& b : enumerate_bpd(Permutation::parse(w))) out.push_back(b.rows());
    return out;
  });
  m.def("enumerate_pd", [](const std::string& w) {
    std::vector<Biword> out;
    for (const auto& c : enumerate_compatible(Permutation::parse(w))) out.push_back(to_py(c));
    return out;
  });
  m.def("enumerate_flagged", [](const std::vector<int>& shape, const std::vector<int>& flag) {
    std::vector<Rows> out;
    for (const auto& t : enumerate_flagged(Partition(shape), Flag{flag})) out.push_back(rows_of(t));
    return out;
  });

  m.def("bpd_permutation", [](const std::vector<std::string>& rows) {
    return bpd_permutation(BumplessPipeDream(rows)).to_string();
  });
  m.def("phi", [](const std::vector<std::string>& rows) { return to_py(phi(BumplessPipeDream(rows))); });
  m.def("phi_inverse", [](const Biword& b) { return phi_inverse(from_py(b)).rows(); });
  m.def("pop", [](const std::vector<std::string>& rows) {
    const PopResult p = pop_nabla(BumplessPipeDream(rows));
    return py::make_tuple(p.row, p.letter, p.next.rows());
  });
  m.def("gamma", [](const std::vector<std::string>& rows) {
    const BumplessPipeDream b(rows);
    return rows_of(gamma(b, bpd_permutation(b)));
  });
  m.def("eg_pq", [](const Biword& b) {
    const auto pq = eg_pq(from_py(b));
    return py::make_tuple(rows_of(pq.p_tableau), rows_of(pq.q_tableau));
  });
  m.def("jdt", [](const Rows& t) { return rows_of(jdt(Tableau(t))); });
  m.def("little_bump", [](const Biword& b, int i, int j) { return to_py(little_bump(from_py(b), i, j)); });
  m.def("huang_bump", [](const std::vector<std::string>& rows, int i, int j) {
    return huang_bump(BumplessPipeDream(rows), i, j).rows();
  });
  m.def("ls_recording", [](const std::vector<std::string>& rows) {
    return rows_of(ls_recording(BumplessPipeDream(rows)).tableau);
  });

  m.def(
      "schubert",
      [](const std::string& w, const std::string& method) {
        const auto p = Permutation::parse(w);
        if (method == "pd") return schubert_pd(p).to_string();
        if (method == "bpd") return schubert_bpd(p).to_string();
        if (method == "flagged") return flagged_schur(p).to_string();
        throw Error(ErrorCode::InvalidArgument, "method is pd, bpd or flagged");
      },
      py::arg("w"), py::arg("method") = "pd");

  m.def("render_tikz", [](const std::vector<std::string>& rows) { return render_tikz(BumplessPipeDream(rows)); });

  m.def(
      "verify",
      [](const std::string& theorem, int n, unsigned threads) {
        const auto t = parse_theorem(theorem);
        if (!t) throw Error(ErrorCode::InvalidArgument, "unknown theorem '" + theorem + "'");
        VerifyReport r;
        {
          py::gil_scoped_release release;
          r = verify(*t, n, threads);
        }
        return nlohmann::json(r).dump();
      },
      py::arg("theorem"), py::arg("n"), py::arg("threads") = 0);
}
