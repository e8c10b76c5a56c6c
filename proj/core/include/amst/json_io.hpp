#pragma once

#include <string>

#include <json.hpp>

#include "amst/adapters.hpp"
#include "amst/compactness.hpp"
#include "amst/consequence.hpp"
#include "amst/counterexample.hpp"
#include "amst/structure.hpp"
#include "amst/suite.hpp"
#include "amst/topology.hpp"
#include "amst/ultra.hpp"

namespace amst::io {

using nlohmann::json;

// {"sentences": [...], "models": [...], "kind": "normal"|"general",
//  "matrix": [[0/1,...]]}; general matrices have 2^|L| columns indexed by
// subset bitmask (bit k = sentence k).
json amst_to_json(const FiniteAmst& a);
FiniteAmst amst_from_json(const json& j);

// {"sentences": [...], "turnstile": [[0/1 per sentence],...]} with rows
// indexed by subset bitmask.
json logical_structure_to_json(const LogicalStructure& ls);
LogicalStructure logical_structure_from_json(const json& j);

// {"ground_size": n, "opens": [bitmask,...]}
json topology_to_json(const FiniteTopology& t);
FiniteTopology topology_from_json(const json& j);

// {"index_size": n, "members": [bitmask,...]}
json set_family_to_json(const SetFamily& f);
SetFamily set_family_from_json(const json& j);

// {"index_size": n, "entries": [model index,...]}
json sequence_to_json(const ModelSequence& s);
ModelSequence sequence_from_json(const json& j);

json characterization_to_json(const CharacterizationReport& rep);
json counterexample_to_json(const CounterexampleReport& rep);
json verdicts_to_json(const std::vector<Verdict>& verdicts);

// adapter structures
json info_system_to_json(const InformationSystem& is);
InformationSystem info_system_from_json(const json& j);
json chu_to_json(const ChuSpace& chu);
ChuSpace chu_from_json(const json& j);
json quiver_to_json(const Quiver& q);
Quiver quiver_from_json(const json& j);
json category_to_json(const ObjectFreeCategory& c);
ObjectFreeCategory category_from_json(const json& j);

json load_file(const std::string& path);  // throws Error(Io)

}  // namespace amst::io
