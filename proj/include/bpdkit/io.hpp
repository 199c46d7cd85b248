#pragma once

#include <string>

#include "json.hpp"

#include "bpdkit/bijections.hpp"
#include "bpdkit/bpd.hpp"
#include "bpdkit/partition.hpp"
#include "bpdkit/permutation.hpp"
#include "bpdkit/pipedream.hpp"
#include "bpdkit/schubert.hpp"
#include "bpdkit/tableau.hpp"

namespace bpdkit {

using json = nlohmann::json;

// Every object serializes with a "type" tag so a stream of records can be
// read back without context. Readers also accept the untagged forms below.
//   permutation  {"type":"permutation","one_line":[1,4,3,2]}   or "1432"
//   biword       {"type":"biword","rows":[..],"letters":[..]}
//   pd           {"type":"pd","n":4,"crosses":[[1,2],..]}
//   bpd          {"type":"bpd","rows":["r---",..]}
//   tableau      {"type":"tableau","rows":[[1,1],[2]]}
//   polynomial   {"terms":[{"exp":[2,1],"coeff":1},..]}

void to_json(json& j, const Cell& c);
void from_json(const json& j, Cell& c);
void to_json(json& j, const Permutation& w);
void from_json(const json& j, Permutation& w);
void to_json(json& j, const Partition& p);
void from_json(const json& j, Partition& p);
void to_json(json& j, const Flag& f);
void from_json(const json& j, Flag& f);
void to_json(json& j, const CompatibleSequence& c);
void from_json(const json& j, CompatibleSequence& c);
void to_json(json& j, const PipeDream& p);
void from_json(const json& j, PipeDream& p);
void to_json(json& j, const BumplessPipeDream& b);
void from_json(const json& j, BumplessPipeDream& b);
void to_json(json& j, const Tableau& t);
void from_json(const json& j, Tableau& t);
void to_json(json& j, const SparsePolynomial& p);
void from_json(const json& j, SparsePolynomial& p);
void to_json(json& j, const BumpTrace& t);
void from_json(const json& j, BumpTrace& t);
void to_json(json& j, const PopResult& p);

/// Value of the "type" tag, or a guess from the keys present ("" if none fits).
std::string object_kind(const json& j);

/// Throws InvalidArgument with the parser's message.
json parse_json(const std::string& text);

}  // namespace bpdkit
