#include "bpdkit/io.hpp"

namespace bpdkit {

namespace {

void expect_kind(const json& j, const char* kind) {
  if (j.is_object() && j.contains("type") && j["type"] != kind)
    throw Error(ErrorCode::InvalidArgument, std::string("expected a ") + kind + ", got " + j["type"].dump());
}

template <class T>
T field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorCode::InvalidArgument, std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::InvalidArgument, std::string("bad field '") + key + "': " + e.what());
  }
}

}  // namespace

void to_json(json& j, const Cell& c) { j = json::array({c.row, c.col}); }

void from_json(const json& j, Cell& c) {
  if (!j.is_array() || j.size() != 2) throw Error(ErrorCode::InvalidArgument, "a cell is [row, col]");
  c = {j[0].get<int>(), j[1].get<int>()};
}

void to_json(json& j, const Permutation& w) {
  j = {{"type", "permutation"}, {"one_line", w.window()}, {"text", w.to_string()}};
}

void from_json(const json& j, Permutation& w) {
  if (j.is_string()) {
    w = Permutation::parse(j.get<std::string>());
  } else if (j.is_array()) {
    w = Permutation(j.get<std::vector<int>>());
  } else {
    expect_kind(j, "permutation");
    w = Permutation(field<std::vector<int>>(j, "one_line"));
  }
}

void to_json(json& j, const Partition& p) { j = p.parts(); }
void from_json(const json& j, Partition& p) { p = Partition(j.get<std::vector<int>>()); }
void to_json(json& j, const Flag& f) { j = f.bounds; }
void from_json(const json& j, Flag& f) { f.bounds = j.get<std::vector<int>>(); }

void to_json(json& j, const CompatibleSequence& c) {
  j = {{"type", "biword"}, {"rows", c.rows}, {"letters", c.letters}};
}

void from_json(const json& j, CompatibleSequence& c) {
  expect_kind(j, "biword");
  c.rows = field<std::vector<int>>(j, "rows");
  c.letters = field<std::vector<int>>(j, "letters");
  if (c.rows.size() != c.letters.size()) throw Error(ErrorCode::InvalidBiword, "rows and letters differ in length");
}

void to_json(json& j, const PipeDream& p) {
  j = {{"type", "pd"}, {"n", p.n()}, {"crosses", p.crosses()}};
}

void from_json(const json& j, PipeDream& p) {
  expect_kind(j, "pd");
  p = PipeDream(field<int>(j, "n"), field<std::vector<Cell>>(j, "crosses"));
}

void to_json(json& j, const BumplessPipeDream& b) { j = {{"type", "bpd"}, {"rows", b.rows()}}; }

void from_json(const json& j, BumplessPipeDream& b) {
  if (j.is_array()) {
    b = BumplessPipeDream(j.get<std::vector<std::string>>());
    return;
  }
  expect_kind(j, "bpd");
  b = BumplessPipeDream(field<std::vector<std::string>>(j, "rows"));
}

void to_json(json& j, const Tableau& t) { j = {{"type", "tableau"}, {"rows", t.rows()}}; }

void from_json(const json& j, Tableau& t) {
  if (j.is_array()) {
    t = Tableau(j.get<std::vector<std::vector<int>>>());
    return;
  }
  expect_kind(j, "tableau");
  t = Tableau(field<std::vector<std::vector<int>>>(j, "rows"));
}

void to_json(json& j, const SparsePolynomial& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({{"exp", e}, {"coeff", c}});
  j = {{"type", "polynomial"}, {"terms", terms}, {"text", p.to_string()}};
}

void from_json(const json& j, SparsePolynomial& p) {
  expect_kind(j, "polynomial");
  p = SparsePolynomial();
  for (const auto& t : field<json>(j, "terms")) p.add(field<Exponent>(t, "exp"), field<std::int64_t>(t, "coeff"));
}

void to_json(json& j, const BumpTrace& t) {
  json steps = json::array();
  for (const auto& s : t.steps) {
    json step = {{"kind", s.kind}, {"at", s.at}, {"to", s.to}};
    if (s.index >= 0) step["index"] = s.index;
    steps.push_back(step);
  }
  j = {{"type", "trace"}, {"transposition", {t.transposition.first, t.transposition.second}}, {"steps", steps}};
  if (t.grid_size > 0) j["grid_size"] = t.grid_size;
}

void from_json(const json& j, BumpTrace& t) {
  expect_kind(j, "trace");
  const auto tr = field<std::vector<int>>(j, "transposition");
  if (tr.size() != 2) throw Error(ErrorCode::InvalidArgument, "transposition must have two entries");
  t.transposition = {tr[0], tr[1]};
  t.grid_size = j.value("grid_size", 0);
  t.steps.clear();
  for (const auto& s : field<json>(j, "steps"))
    t.steps.push_back({field<std::string>(s, "kind"), field<Cell>(s, "at"), field<Cell>(s, "to"), s.value("index", -1)});
}

void to_json(json& j, const PopResult& p) {
  j = {{"type", "pop"}, {"row", p.row}, {"letter", p.letter}, {"next", p.next}};
}

std::string object_kind(const json& j) {
  if (j.is_string()) return "permutation";
  // bare arrays: row strings are a BPD, integers a one-line permutation
  if (j.is_array() && !j.empty()) return j[0].is_string() ? "bpd" : j[0].is_number_integer() ? "permutation" : "";
  if (!j.is_object()) return "";
  if (j.contains("type") && j["type"].is_string()) return j["type"].get<std::string>();
  if (j.contains("letters")) return "biword";
  if (j.contains("crosses")) return "pd";
  if (j.contains("one_line")) return "permutation";
  if (j.contains("terms")) return "polynomial";
  if (j.contains("rows") && j["rows"].is_array() && !j["rows"].empty())
    return j["rows"][0].is_string() ? "bpd" : "tableau";
  return "";
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::InvalidArgument, std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace bpdkit
