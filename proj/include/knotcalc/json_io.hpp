#pragma once

#include <string>

#include "json.hpp"
#include "knotcalc/fronts.hpp"
#include "knotcalc/topology.hpp"
#include "knotcalc/vassiliev.hpp"

namespace knotcalc {

// Key order is part of the documented formats, so the ordered variant is
// used throughout.
using Json = nlohmann::ordered_json;

// FormatError on unparsable text or a "format" key other than 1. Every
// schema carries "format": 1 at top level; nested objects may omit it.
Json parse_json_text(const std::string& text);

Json load_json_file(const std::string& path);

void save_json_file(const std::string& path, const Json& j);

Json front_to_json(const OrientedFront& front);
OrientedFront front_from_json(const Json& j);

Json framed_to_json(const FramedDiagram& k);
FramedDiagram framed_from_json(const Json& j);

Json singular_to_json(const SingularFramedDiagram& s);
SingularFramedDiagram singular_from_json(const Json& j);

// Framed move object: {"type": "r2-insert" | "r2-remove" | "r3" |
// "kink-cancel" | "offset-trade-insert" | "offset-trade-remove", ...fields}.
FramedMove move_from_json(const Json& j);

// Crossing-change events are stored as (crossing, sign, loops?); the loader
// replays the sequence and rebuilds each snapshot from the state it applies
// to, so snapshots are never serialized.
Json sequence_to_json(const MoveSequence& path);
MoveSequence sequence_from_json(const Json& j);

Json ladder_to_json(const InvariantLadder<IntGroup>& ladder);
InvariantLadder<IntGroup> ladder_from_json(const Json& j);

Json descriptor_to_json(const ManifoldDescriptor& d);
ManifoldDescriptor descriptor_from_json(const Json& j);

}  // namespace knotcalc
