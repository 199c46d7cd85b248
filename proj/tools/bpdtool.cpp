// bpdtool: command-line front end for the bpdkit library.
//
// Exit codes: 0 success, 1 verification failure or a rejected operation,
// 2 usage error (bad flags or unreadable input).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "bpdkit/bijections.hpp"
#include "bpdkit/insertion.hpp"
#include "bpdkit/io.hpp"
#include "bpdkit/render.hpp"
#include "bpdkit/schubert.hpp"
#include "bpdkit/verify.hpp"

using namespace bpdkit;

namespace {

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int max_n() {
  if (const char* env = std::getenv("BPDTOOL_MAX_N")) {
    try {
      return std::stoi(env);
    } catch (const std::exception&) {
      throw Usage("BPDTOOL_MAX_N is not an integer");
    }
  }
  return 6;
}

Permutation perm_arg(const std::string& text) {
  try {
    return Permutation::parse(text);
  } catch (const Error& e) {
    throw Usage(e.what());
  }
}

void check_size(int n) {
  if (n > max_n()) throw Usage("n = " + std::to_string(n) + " exceeds the cap " + std::to_string(max_n()) + " (BPDTOOL_MAX_N)");
}

std::vector<int> int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw Usage("not a comma separated list of integers: " + text);
    }
  }
  return out;
}

// Input objects come from --input, --file (or "-" for stdin).
json read_input(const std::string& inline_json, const std::string& file) {
  std::string text = inline_json;
  if (text.empty()) {
    if (file.empty() || file == "-") {
      std::stringstream ss;
      ss << std::cin.rdbuf();
      text = ss.str();
    } else {
      std::ifstream in(file);
      if (!in) throw Usage("cannot read " + file);
      std::stringstream ss;
      ss << in.rdbuf();
      text = ss.str();
    }
  }
  try {
    return parse_json(text);
  } catch (const Error& e) {
    throw Usage(e.what());
  }
}

template <class T>
T as(const json& j) {
  try {
    return j.get<T>();
  } catch (const json::exception& e) {
    throw Usage(e.what());
  } catch (const Error& e) {
    if (e.code() == ErrorCode::InvalidArgument) throw Usage(e.what());
    throw;
  }
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw Usage("cannot write " + path);
    }
  }
  std::ostream& out() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

// Renders a JSON object in the requested format.
std::string format_object(const json& j, const std::string& format, bool standalone) {
  if (format == "json") return j.dump() + "\n";
  const std::string kind = object_kind(j);
  std::string body;
  if (kind == "bpd") {
    const auto b = as<BumplessPipeDream>(j);
    body = format == "ascii" ? render_ascii(b) : render_tikz(b);
  } else if (kind == "pd" || kind == "biword") {
    const PipeDream p = kind == "pd" ? as<PipeDream>(j) : biword_to_pd(as<CompatibleSequence>(j));
    body = format == "ascii" ? render_ascii(p) : render_tikz(p);
  } else if (kind == "tableau") {
    const auto t = as<Tableau>(j);
    body = format == "ascii" ? render_ascii(t) : render_tikz(t);
  } else if (kind == "pop" && j.contains("next")) {
    return "pop (" + std::to_string(j["row"].get<int>()) + ";" + std::to_string(j["letter"].get<int>()) + ")\n" +
           format_object(j["next"], format, standalone);
  } else {
    return j.dump(2) + "\n";
  }
  return format == "tikz" && standalone ? tikz_document(body) : body;
}

json run_map(const std::string& op, const json& in, int i, int j, const std::string& perm, bool trace) {
  const std::string kind = object_kind(in);
  auto need = [&](const char* k) {
    if (kind != k) throw Usage("operation '" + op + "' needs a " + k + " input, got '" + kind + "'");
  };
  auto need_pair = [&] {
    if (i <= 0 || j <= 0) throw Usage("operation '" + op + "' needs --i and --j");
  };
  if (op == "nabla" || op == "pop") {
    need("bpd");
    PopResult p = pop_nabla(as<BumplessPipeDream>(in));
    if (op == "pop") return {{"type", "pop"}, {"row", p.row}, {"letter", p.letter}};
    return p;
  }
  if (op == "phi") {
    need("bpd");
    return phi(as<BumplessPipeDream>(in));
  }
  if (op == "phi-inv") {
    if (kind == "pd") return phi_inverse(as<PipeDream>(in));
    need("biword");
    return phi_inverse(as<CompatibleSequence>(in));
  }
  if (op == "little") {
    need("biword");
    need_pair();
    BumpTrace t;
    json out = little_bump(as<CompatibleSequence>(in), i, j, &t);
    if (trace) out = {{"result", out}, {"trace", t}};
    return out;
  }
  if (op == "huang") {
    need("bpd");
    need_pair();
    BumpTrace t;
    json out = huang_bump(as<BumplessPipeDream>(in), i, j, &t);
    if (trace) out = {{"result", out}, {"trace", t}};
    return out;
  }
  if (op == "ls") {
    need("bpd");
    const auto r = ls_recording(as<BumplessPipeDream>(in));
    return {{"type", "ls"}, {"chain", r.chain}, {"tableau", r.tableau}};
  }
  if (op == "gamma") {
    need("bpd");
    const auto b = as<BumplessPipeDream>(in);
    return gamma(b, perm.empty() ? bpd_permutation(b) : perm_arg(perm));
  }
  if (op == "jdt") {
    need("tableau");
    return jdt(as<Tableau>(in));
  }
  if (op == "eg") {
    need("biword");
    const auto pq = eg_pq(as<CompatibleSequence>(in));
    return {{"type", "eg"}, {"p", pq.p_tableau}, {"q", pq.q_tableau}};
  }
  throw Usage("unknown operation '" + op + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pipe dreams, bumpless pipe dreams and the maps between them"};
  app.require_subcommand(1);

  std::string perm, object, shape_text, flag_text, format = "json", out_path, op, theorem, method = "pd";
  std::string input, file;
  int n = 0, bump_i = 0, bump_j = 0;
  unsigned threads = 0;
  bool trace = false, standalone = false;

  auto* en = app.add_subcommand("enumerate", "List every object of a kind, one JSON record per line");
  en->add_option("--object", object, "pd | bpd | biword | ssyt | redwords")->required();
  en->add_option("--perm", perm, "permutation in one-line notation");
  en->add_option("--shape", shape_text, "partition, e.g. 2,1");
  en->add_option("--flag", flag_text, "flag, e.g. 2,3");
  en->add_option("--format", format, "json | ascii | tikz");
  en->add_option("--out", out_path, "write to FILE");

  auto* mp = app.add_subcommand("map", "Apply one operation to a JSON object");
  mp->add_option("--op", op, "nabla | pop | phi | phi-inv | little | huang | ls | gamma | jdt | eg")->required();
  mp->add_option("--input", input, "the object as inline JSON");
  mp->add_option("--file", file, "read the object from FILE ('-' for stdin)");
  mp->add_option("--i", bump_i, "smaller pipe label for little/huang");
  mp->add_option("--j", bump_j, "larger pipe label for little/huang");
  mp->add_option("--perm", perm, "permutation for gamma (defaults to the BPD's own)");
  mp->add_option("--format", format, "json | ascii | tikz");
  mp->add_flag("--trace", trace, "include the bump trace");
  mp->add_flag("--standalone", standalone, "wrap TikZ in a document");
  mp->add_option("--out", out_path, "write to FILE");

  auto* vf = app.add_subcommand("verify", "Check a statement exhaustively over S_n");
  vf->add_option("--theorem", theorem, "grassmannian | main | lenart | huangcor | canonical | hy | recording | schubert | all")
      ->required();
  vf->add_option("--n", n, "size")->required();
  vf->add_option("--threads", threads, "worker count (default: all cores)");
  vf->add_option("--out", out_path, "write to FILE");

  auto* rd = app.add_subcommand("render", "Draw a JSON object");
  rd->add_option("--input", input, "the object as inline JSON");
  rd->add_option("--file", file, "read the object from FILE ('-' for stdin)");
  rd->add_option("--format", format, "ascii | tikz")->check(CLI::IsMember({"ascii", "tikz"}));
  rd->add_flag("--standalone", standalone, "wrap TikZ in a document");
  rd->add_option("--out", out_path, "write to FILE");

  auto* sc = app.add_subcommand("schubert", "Schubert polynomial of a permutation");
  sc->add_option("--perm", perm, "permutation in one-line notation")->required();
  sc->add_option("--method", method, "pd | bpd | flagged")->check(CLI::IsMember({"pd", "bpd", "flagged"}));
  sc->add_option("--format", format, "text | json");
  sc->add_option("--out", out_path, "write to FILE");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*rd && format == "json") format = "ascii";
    if (!(*sc) && format != "json" && format != "ascii" && format != "tikz") throw Usage("unknown format '" + format + "'");
    Output output(out_path);
    std::ostream& os = output.out();

    if (*en) {
      auto emit = [&](const json& j) { os << format_object(j, format, false); };
      if (object == "ssyt") {
        if (shape_text.empty() || flag_text.empty()) throw Usage("ssyt needs --shape and --flag");
        const Partition lambda(int_list(shape_text));
        const Flag phi_flag{int_list(flag_text)};
        for (const auto& t : enumerate_flagged(lambda, phi_flag)) emit(t);
        return 0;
      }
      if (perm.empty()) throw Usage(object + " needs --perm");
      const Permutation w = perm_arg(perm);
      check_size(w.size());
      if (object == "pd") {
        for (const auto& p : enumerate_pd(w)) emit(p);
      } else if (object == "biword") {
        for (const auto& c : enumerate_compatible(w)) emit(c);
      } else if (object == "bpd") {
        for (const auto& b : enumerate_bpd(w)) emit(b);
      } else if (object == "redwords") {
        for (const auto& word : reduced_words(w)) os << json(word).dump() << "\n";
      } else {
        throw Usage("unknown object '" + object + "'");
      }
      return 0;
    }

    if (*mp) {
      const json in = read_input(input, file);
      const json result = run_map(op, in, bump_i, bump_j, perm, trace);
      if (format != "json" && result.contains("result")) {
        os << format_object(result["result"], format, standalone);
        os << result["trace"].dump() << "\n";
      } else {
        os << format_object(result, format, standalone);
      }
      return 0;
    }

    if (*vf) {
      check_size(n);
      std::vector<Theorem> which;
      if (theorem == "all") {
        which = all_theorems();
      } else if (auto t = parse_theorem(theorem)) {
        which = {*t};
      } else {
        throw Usage("unknown theorem '" + theorem + "'");
      }
      bool pass = true;
      for (Theorem t : which) {
        const VerifyReport r = verify(t, n, threads);
        os << json(r).dump() << "\n";
        pass = pass && r.pass;
      }
      return pass ? 0 : 1;
    }

    if (*rd) {
      const json in = read_input(input, file);
      if (object_kind(in).empty()) throw Usage("cannot tell what kind of object this is");
      os << format_object(in, format, standalone);
      return 0;
    }

    if (*sc) {
      const Permutation w = perm_arg(perm);
      check_size(w.size());
      const SparsePolynomial p = method == "pd" ? schubert_pd(w) : method == "bpd" ? schubert_bpd(w) : flagged_schur(w);
      const std::string f = sc->count("--format") ? format : "text";
      if (f == "json") os << json(p).dump() << "\n";
      else if (f == "text") os << p.to_string() << "\n";
      else throw Usage("schubert output is text or json");
      return 0;
    }
  } catch (const Usage& e) {
    std::cerr << json({{"error", "usage"}, {"message", e.what()}}).dump() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << json({{"error", to_string(e.code())}, {"message", e.what()}}).dump() << "\n";
    return 1;
  }
  return 0;
}
