// Canonical JSON encoding of the core types. Objects serialize with
// sorted keys (nlohmann maps), weight-keyed arrays in ascending
// lexicographic order of coordinates, and simple-root indices / Weyl
// words 1-based, so byte-identical output is reproducible.

#pragma once

#include <string>

#include <json.hpp>

#include "characters.hpp"
#include "orbits.hpp"
#include "predictions.hpp"
#include "qpoly.hpp"
#include "rootsystem.hpp"
#include "weyl.hpp"

namespace liecoh {

using json = nlohmann::json;

json to_json(const Weight& w);
json to_json(const RootVector& r);
json to_json(const QPolynomial& p);       // coefficient array [c0, c1, ...]
json word_to_json(const std::vector<int>& word);    // 1-based letters
json subset_to_json(const std::vector<int>& J);     // 1-based indices
json to_json(const Character& c);         // [{"weight": [...], "mult": m}, ...]
json to_json(const GradedCharacter& c);   // [{"weight": [...], "poly": [...]}, ...]
json to_json(const Partition& p);
json decomposition_to_json(const std::map<Weight, long long>& dec);
json to_json(const Hypothesis& h);
json hypotheses_to_json(const std::vector<Hypothesis>& hs);
json to_json(const RootSystem& rs);
json element_to_json(const RootSystem& rs, const WeylElement& w);
json prediction_to_json(const RootSystem& rs, const CohomologyPrediction& p);
json weighteq_to_json(const RootSystem& rs, const WeighteqReport& r);
json kempf_to_json(const RootSystem& rs, const KempfReport& r);
json linkage_to_json(const RootSystem& rs, const LinkageReport& r);
json orbit_to_json(const OrbitDescriptor& o, const std::vector<long long>& series);

Weight weight_from_json(const json& j);
RootVector root_from_json(const json& j);
QPolynomial qpoly_from_json(const json& j);
std::vector<int> word_from_json(const json& j);     // back to 0-based
std::vector<int> subset_from_json(const json& j);
Character character_from_json(const json& j);
GradedCharacter graded_character_from_json(const json& j);

// Canonical text form used everywhere output must be byte-stable.
std::string dump_canonical(const json& j);

}  // namespace liecoh
