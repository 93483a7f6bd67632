#include "wsel/lab/json_io.hpp"

#include <string>

#include "wsel/error.hpp"

namespace wsel::lab {
namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::parse_error, what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

int as_int(const json& j, const char* what) {
  if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
  return j.get<int>();
}

}  // namespace

json encode(PointSet s) { return s.to_vector(); }

json encode(const Tournament& t) {
  json edges = json::array();
  for (auto [x, y] : t.pairs()) edges.push_back({x, y});
  return {{"n", t.size()}, {"edges", edges}};
}

json encode(const KingReport& r) {
  json j{{"kings", encode(r.kings)},
         {"quasi_kings", encode(r.quasi_kings)},
         {"emperor", r.emperor ? json(*r.emperor) : json(nullptr)}};
  json classes = json::array();
  for (PointSet c : r.condensation) classes.push_back(encode(c));
  j["condensation"] = classes;
  if (!r.witness_chains.empty()) {
    json chains = json::array();
    for (const auto& [key, chain] : r.witness_chains) {
      chains.push_back({{"from", key.first}, {"to", key.second}, {"chain", chain}});
    }
    j["witness_chains"] = chains;
  }
  return j;
}

json encode(const FiniteTopology& t) {
  json opens = json::array();
  for (PointSet s : t.open_sets()) opens.push_back(encode(s));
  return {{"n", t.size()}, {"opens", opens}};
}

json encode(const SelectionOnSpace& s) {
  return {{"tournament", encode(s.selection())}, {"topology", encode(s.topology())}};
}

json encode(const ContinuityReport& r) {
  return {{"separately", r.separately},
          {"vietoris", r.vietoris},
          {"properly", r.properly},
          {"selection_topology_discrete", r.selection_topology_discrete},
          {"hausdorff", r.hausdorff}};
}

json encode(const PartitionedSelection& p) {
  json parts = json::array();
  for (PointSet s : p.parts) parts.push_back(encode(s));
  json etas = json::array();
  for (const Tournament& t : p.etas) etas.push_back(encode(t));
  return {{"parts", parts}, {"gamma", encode(p.gamma)}, {"etas", etas}};
}

json encode(const LexsumContinuityReport& r) {
  return {{"summands_separately", r.summands_separately},
          {"sum_separately", r.sum_separately},
          {"summands_vietoris", r.summands_vietoris},
          {"sum_vietoris", r.sum_vietoris},
          {"ok", r.ok()}};
}

json encode(const BlockSpace& bs) {
  json blocks = json::array();
  for (const Block& b : bs.blocks()) {
    if (b.kind == BlockKind::finite_chain && b.chain_length != 2) {
      blocks.push_back({{"finite_chain", b.chain_length}});
    } else {
      blocks.push_back(std::string(to_string(b.kind)));
    }
  }
  json reversed = json::array();
  for (bool r : bs.reversed()) reversed.push_back(r);
  return {{"blocks", blocks}, {"gamma", encode(bs.gamma())}, {"reversed", reversed}};
}

json encode(const SymbolicKingReport& r) {
  json qk = json::array();
  json kings = json::array();
  for (int b = 0; b < static_cast<int>(r.quasi_king.size()); ++b) {
    if (r.quasi_king[b] != Qualifier::none) {
      qk.push_back({{"block", b}, {"points", std::string(to_string(r.quasi_king[b]))}});
    }
    if (r.king[b] != Qualifier::none) {
      kings.push_back({{"block", b}, {"points", std::string(to_string(r.king[b]))}});
    }
  }
  json classes = json::array();
  for (PointSet c : r.block_condensation) classes.push_back(encode(c));
  json paths = json::array();
  for (const auto& p : r.witness_paths) paths.push_back(p);
  return {{"quasi_kings", qk},
          {"kings", kings},
          {"emperor_block", r.emperor_block ? json(*r.emperor_block) : json(nullptr)},
          {"block_condensation", classes},
          {"witness_paths", paths}};
}

json encode(const ClopenWitness& w) {
  return {{"component", encode(w.component)},
          {"y_blocks", encode(w.y_blocks)},
          {"rest_below_component", w.rest_below_component},
          {"clopen", w.clopen},
          {"upper_cut", w.upper_cut ? json(std::string(to_string(*w.upper_cut))) : json(nullptr)}};
}

PointSet decode_point_set(const json& j) {
  if (!j.is_array()) bad("point set must be an array");
  PointSet s;
  for (const json& x : j) {
    const int p = as_int(x, "point");
    if (p < 0 || p >= kMaxPoints) throw Error(ErrorCode::out_of_range_point, std::to_string(p));
    s.insert(p);
  }
  return s;
}

Tournament decode_tournament(const json& j) {
  const int n = as_int(field(j, "n"), "n");
  const json& edges = field(j, "edges");
  if (!edges.is_array()) bad("edges must be an array");
  std::vector<std::pair<int, int>> pairs;
  for (const json& e : edges) {
    if (!e.is_array() || e.size() != 2) bad("edge must be [x, y]");
    pairs.emplace_back(as_int(e[0], "edge endpoint"), as_int(e[1], "edge endpoint"));
  }
  return Tournament::from_pairs(n, pairs);
}

FiniteTopology decode_topology(const json& j, bool strict, bool* completed) {
  const int n = as_int(field(j, "n"), "n");
  const json& opens = field(j, "opens");
  if (!opens.is_array()) bad("opens must be an array");
  std::vector<PointSet> family;
  for (const json& o : opens) family.push_back(decode_point_set(o));
  OpenFamilyResult r = from_open_family(n, family, strict);
  if (completed) *completed = !r.was_topology;
  return r.topology;
}

SelectionOnSpace decode_pairing(const json& j, bool strict, bool* completed) {
  return SelectionOnSpace(decode_tournament(field(j, "tournament")),
                          decode_topology(field(j, "topology"), strict, completed));
}

PartitionedSelection decode_partition(const json& j) {
  PartitionedSelection p{{}, decode_tournament(field(j, "gamma")), {}};
  const json& parts = field(j, "parts");
  const json& etas = field(j, "etas");
  if (!parts.is_array() || !etas.is_array()) bad("parts and etas must be arrays");
  for (const json& part : parts) p.parts.push_back(decode_point_set(part));
  for (const json& eta : etas) p.etas.push_back(decode_tournament(eta));
  validate(p);
  return p;
}

BlockSpace decode_blockspace(const json& j) {
  const json& blocks = field(j, "blocks");
  if (!blocks.is_array()) bad("blocks must be an array");
  std::vector<Block> parsed;
  for (const json& b : blocks) {
    if (b.is_string()) {
      parsed.push_back({block_kind_from_string(b.get<std::string>()), 2});
    } else if (b.is_object() && b.size() == 1 && b.contains("finite_chain")) {
      parsed.push_back({BlockKind::finite_chain, as_int(b.at("finite_chain"), "finite_chain length")});
    } else {
      bad("block must be a kind name or {\"finite_chain\": k}");
    }
  }
  std::vector<bool> reversed;
  if (j.contains("reversed")) {
    const json& r = j.at("reversed");
    if (!r.is_array()) bad("reversed must be an array");
    for (const json& flag : r) {
      if (!flag.is_boolean()) bad("reversed entries must be booleans");
      reversed.push_back(flag.get<bool>());
    }
  }
  return BlockSpace(std::move(parsed), decode_tournament(field(j, "gamma")), std::move(reversed));
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    bad(e.what());
  }
}

}  // namespace wsel::lab
