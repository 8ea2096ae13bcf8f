#pragma once

// JSON encodings of the library types. Every parser throws ParseError on
// malformed input and rethrows the domain errors of the constructors.
//
//   field        {"p": 5, "n": 2, "modulus": [2, 0, 1]}        low degree first
//   field elem   [c0, ..., c_{n-1}] or an integer for prime fields
//   cyclotomic   {"L": 6, "coeffs": [...]}                      entries int or decimal string
//   group        {"kind": "abelian", "factors": [...]}
//                {"kind": "semidirect2p2", "p": 3, "sign_a": -1, "sign_b": -1}
//                {"kind": "dihedral", "rotations": 9}
//                {"kind": "quartic", "field": {...}, "e": [...], "f": [...]}
//   group elem   flat coordinate array
//   certificate  {"group": ..., "N": [elem, ...], "R": [elem, ...], "params": {"m", "n", "k", "lambda"}}

#include <json.hpp>

#include <string>
#include <vector>

#include "semirds/bent.hpp"
#include "semirds/cyclo.hpp"
#include "semirds/ff.hpp"
#include "semirds/groups.hpp"
#include "semirds/mub.hpp"
#include "semirds/rds.hpp"
#include "semirds/search.hpp"

namespace semirds {

using Json = nlohmann::ordered_json;

Json bigint_to_json(const BigInt& v);
BigInt bigint_from_json(const Json& j);

Json field_to_json(const FieldCtx& k);
FieldCtx field_from_json(const Json& j);
Json field_elem_to_json(const FieldElem& a);
FieldElem field_elem_from_json(const FieldCtx& k, const Json& j);

Json cycint_to_json(const CycInt& a);
CycInt cycint_from_json(const Json& j);

Json spec_to_json(const GroupSpec& spec);
GroupSpec spec_from_json(const Json& j);

Json elem_to_json(const Group& g, GroupElem x);
GroupElem elem_from_json(const Group& g, const Json& j);
Json elems_to_json(const Group& g, const std::vector<GroupElem>& xs);
std::vector<GroupElem> elems_from_json(const Group& g, const Json& j);

Json params_to_json(const RdsParams& p);
RdsParams params_from_json(const Json& j);

Json rds_to_json(const RdsInstance& inst);
RdsInstance rds_from_json(const Json& j);

Json brute_to_json(const Group& g, const BruteVerdict& v);
BruteVerdict brute_from_json(const Group& g, const Json& j);
Json char_verdict_to_json(const CharVerdict& v);
CharVerdict char_verdict_from_json(const Json& j);

/// {"m", "L", "bases": [{"label", "standard", "vectors": [[coeffs, ...], ...]}]};
/// each entry is its full-length coefficient list over xi_L.
Json mub_to_json(const MubFamily& fam);
MubFamily mub_from_json(const Json& j);
Json mub_verdict_to_json(const MubVerdict& v);
MubVerdict mub_verdict_from_json(const Json& j);
/// Normalized entries as [re, im] pairs.
Json mub_float_to_json(const MubFamily& fam);

Json pfunction_to_json(const PFunction& f);
PFunction pfunction_from_json(const Json& j);
Json hou_to_json(std::int64_t p, const HouResult& r);
HouResult hou_from_json(const Json& j);

Json lemma14_to_json(const Lemma14Verdict& v);
Lemma14Verdict lemma14_from_json(const Json& j);

/// Search report; "seconds" only when timing is set.
Json search_to_json(const SearchTask& task, const SearchResult& r, bool timing = false);
SearchResult search_from_json(const Json& j, SearchTask* task = nullptr);

Json sweep_to_json(const SweepReport& r);
SweepReport sweep_from_json(const Json& j);

}  // namespace semirds
