#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "wsel/blockspace.hpp"
#include "wsel/lexsum.hpp"
#include "wsel/seltopo.hpp"
#include "wsel/topology.hpp"
#include "wsel/tournament.hpp"

namespace wsel::lab {

/// A tournament together with its king report; DOT marks kings as node
/// attributes.
struct AnalyzedTournament {
  Tournament t;
  KingReport report;
};

using Exportable = std::variant<Tournament, AnalyzedTournament, KingReport, FiniteTopology,
                                SelectionOnSpace, PartitionedSelection, BlockSpace,
                                SymbolicKingReport>;

/// "json" (single line, sorted keys) or "dot". DOT exists for tournaments
/// and block spaces only; anything else throws UnsupportedFormat.
std::string export_as(const Exportable& obj, std::string_view format);

std::string to_dot(const Tournament& t, const KingReport* report = nullptr);
std::string to_dot(const BlockSpace& bs);

}  // namespace wsel::lab
