#pragma once

#include <potkit/finstruct.hpp>
#include <potkit/kripke.hpp>
#include <potkit/logics.hpp>
#include <potkit/potentialist.hpp>

#include <json.hpp>

#include <string>
#include <vector>

namespace potkit {

using json = nlohmann::ordered_json;

/// Reading and writing of the interchange formats. Every loader throws invalid_structure on a
/// document that does not have the expected shape.
///
///   frame      {"worlds": 3, "access": [[0,0],[0,1],...]}
///   model      frame fields plus "valuation": {"p": [0,2], ...}
///   system     {"name": s, "alphabet": [...], "worlds": [{"label": s, "valuation": {"p": true},
///               "content": [...]}, ...], "order": [[i,j],...], "frontier": [i,...]}
///   structure  {"size": n, "relations": [{"name": s, "arity": k, "tuples": [[...],...]}, ...]}
///
/// Pairs and index lists are written in increasing order.

json to_json( const Frame& fr );
Frame frame_from_json( const json& j );

json to_json( const KripkeModel& m );
KripkeModel model_from_json( const json& j );

json to_json( const PotentialistSystem& s );
PotentialistSystem system_from_json( const json& j );

json to_json( const FiniteStructure& m );
FiniteStructure structure_from_json( const json& j, std::size_t cap = default_structure_cap );

json to_json( const Refutation& r );
json to_json( const SchemeReport& r );

/// Graphviz digraph with every edge, loops included; labels are the world indices unless given.
std::string to_dot( const Frame& fr, const std::vector<std::string>& labels = {} );
/// Graphviz digraph of the Hasse diagram (strict covering pairs) with world labels; frontier
/// worlds are dashed.
std::string to_dot( const PotentialistSystem& s );

} // namespace potkit
