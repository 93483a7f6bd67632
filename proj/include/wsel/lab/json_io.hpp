#pragma once

// JSON instance and report formats.
//
//   tournament  {"n": 4, "edges": [[x, y], ...]}      [x, y] means x <σ y
//   topology    {"n": 3, "opens": [[...], ...]}
//   pairing     {"tournament": ..., "topology": ...}
//   partition   {"parts": [[...], ...], "gamma": tournament, "etas": [tournament, ...]}
//   blockspace  {"blocks": ["open", {"finite_chain": 3}, ...], "gamma": tournament,
//                "reversed": [false, ...]}
//
// Edges are written in row-major order of unordered pairs; point lists are
// sorted; object keys are sorted.

#include <json.hpp>

#include "wsel/blockspace.hpp"
#include "wsel/lexsum.hpp"
#include "wsel/seltopo.hpp"
#include "wsel/topology.hpp"
#include "wsel/tournament.hpp"

namespace wsel::lab {

using nlohmann::json;

json encode(PointSet s);
json encode(const Tournament& t);
json encode(const KingReport& r);
json encode(const FiniteTopology& t);
json encode(const SelectionOnSpace& s);
json encode(const ContinuityReport& r);
json encode(const PartitionedSelection& p);
json encode(const LexsumContinuityReport& r);
json encode(const BlockSpace& bs);
json encode(const SymbolicKingReport& r);
json encode(const ClopenWitness& w);

// Decoders throw Error(ParseError) on malformed input and the usual
// construction errors on invalid content.
PointSet decode_point_set(const json& j);
Tournament decode_tournament(const json& j);
/// `completed` reports whether the open family had to be closed up.
FiniteTopology decode_topology(const json& j, bool strict, bool* completed = nullptr);
SelectionOnSpace decode_pairing(const json& j, bool strict, bool* completed = nullptr);
PartitionedSelection decode_partition(const json& j);
BlockSpace decode_blockspace(const json& j);

/// Parses text, mapping syntax errors to Error(ParseError).
json parse_json(std::string_view text);

}  // namespace wsel::lab
