#pragma once

#include <memory>
#include <string>

#include <json.hpp>

#include "baire/back_and_forth.hpp"
#include "baire/core.hpp"
#include "baire/counterexamples.hpp"
#include "baire/forcing.hpp"
#include "baire/hom.hpp"
#include "baire/lipschitz.hpp"
#include "baire/oracle.hpp"
#include "baire/slalom.hpp"

namespace baire {

using Json = nlohmann::json;

// Wire formats (words are arrays of nonnegative integers):
//   Point          {"stem": Word, "tail": letter}
//   Alphabet       {"finite": k} or {"countable": true}
//   WordTree       array of Words; the downward closure is taken on load
//   TreeHom        {"kind": "table"|"identity"|"parity"|"prepend"|
//                   "relabel"|"compose", ...}; table entries are keyed by
//                   comma-joined letters ("" for the empty word)
//   PartialMap     array of [Point, Point]
//   ParityFamily   {"kind": "odd"|"even", "cells": [{"s": Word, "points": ...}]}
//   Slalom         array of arrays of letters
//   WidthProfile   {"kind": "pow2plus1"|"npow2"|"table", ...}
//   SeparatingSet  array of {"s": Word, "t": Word}
//   oracle         {"kind": "eventually_constant", "alphabet": ..., "tail": l,
//                   "seed": n} or {"kind": "finite", "alphabet": ...,
//                   "points": [Point...]}

Json alphabet_to_json(const Alphabet& a);
Alphabet alphabet_from_json(const Json& j);

Json point_to_json(const Point& x);
Point point_from_json(const Json& j);

Json tree_to_json(const WordTree& t);
WordTree tree_from_json(const Json& j);

Json hom_to_json(const TreeHom& h);
TreeHom hom_from_json(const Json& j);

Json partial_map_to_json(const PartialMap& m);
PartialMap partial_map_from_json(const Json& j);

Json log_distance_to_json(const LogDistance& d);

Json lipschitz_verdict_to_json(const LipschitzVerdict& v);
Json isometry_verdict_to_json(const IsometryVerdict& v);
Json condition_verdict_to_json(const ConditionVerdict& v);
Json level_report_to_json(const LevelReport& r);

Json family_to_json(const ParityFamily& f);
ParityFamily family_from_json(const Json& j);
Json certificate_to_json(const NoIsometryCertificate& c);

Json slalom_to_json(const Slalom& s);
Slalom slalom_from_json(const Json& j);
Json width_profile_to_json(const WidthProfile& p);
WidthProfile width_profile_from_json(const Json& j);
Json bounded_sample_to_json(const BoundedSample& s);
BoundedSample bounded_sample_from_json(const Json& j);
Json tree_width_report_to_json(const TreeWidthReport& r);

Json separating_set_to_json(const SeparatingSet& x);
SeparatingSet separating_set_from_json(const Json& j);
Json antichain_result_to_json(const AntichainResult& r,
                              const std::vector<Condition>& conds);

Json transcript_to_json(const std::vector<BnfStep>& steps);

std::unique_ptr<DenseOracle> oracle_from_json(const Json& j);

/// Parse with shape errors wrapped as JsonFormatError.
Json parse_json_text(const std::string& text);

}  // namespace baire
