#include "wsel/lab/predicate.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>

#include "wsel/error.hpp"
#include "wsel/seltopo.hpp"

namespace wsel::lab {
namespace {

struct TournamentCtx {
  const Tournament& t;
  const KingReport& r;
};
struct BlockCtx {
  const BlockSpace& bs;
  const SymbolicKingReport& r;
};

template <class Ctx>
struct Fact {
  const char* name;
  bool boolean;
  std::function<std::int64_t(const Ctx&)> value;
};

const std::vector<Fact<TournamentCtx>>& tournament_facts() {
  static const std::vector<Fact<TournamentCtx>> facts{
      {"n", false, [](const TournamentCtx& c) { return c.t.size(); }},
      {"king_count", false, [](const TournamentCtx& c) { return c.r.kings.size(); }},
      {"quasi_king_count", false, [](const TournamentCtx& c) { return c.r.quasi_kings.size(); }},
      {"condensation_classes", false,
       [](const TournamentCtx& c) { return static_cast<std::int64_t>(c.r.condensation.size()); }},
      {"has_emperor", true, [](const TournamentCtx& c) { return c.r.emperor.has_value() ? 1 : 0; }},
      {"has_king", true, [](const TournamentCtx& c) { return c.r.kings.empty() ? 0 : 1; }},
      {"kings_eq_quasi_kings", true,
       [](const TournamentCtx& c) { return c.r.kings == c.r.quasi_kings ? 1 : 0; }},
      {"is_transitive", true, [](const TournamentCtx& c) { return c.t.is_transitive() ? 1 : 0; }},
      {"selection_topology_discrete", true,
       [](const TournamentCtx& c) { return selection_topology(c.t).is_discrete() ? 1 : 0; }},
  };
  return facts;
}

const std::vector<Fact<BlockCtx>>& block_facts() {
  static const std::vector<Fact<BlockCtx>> facts{
      {"block_count", false, [](const BlockCtx& c) { return c.bs.size(); }},
      {"quasi_king_block_count", false,
       [](const BlockCtx& c) { return c.r.quasi_king_blocks().size(); }},
      {"king_block_count", false, [](const BlockCtx& c) { return c.r.king_blocks().size(); }},
      {"condensation_classes", false,
       [](const BlockCtx& c) { return static_cast<std::int64_t>(c.r.block_condensation.size()); }},
      {"has_quasi_king", true, [](const BlockCtx& c) { return c.r.has_quasi_king() ? 1 : 0; }},
      {"has_king", true, [](const BlockCtx& c) { return c.r.has_king() ? 1 : 0; }},
      {"has_emperor", true, [](const BlockCtx& c) { return c.r.emperor_block ? 1 : 0; }},
      {"gamma_transitive", true, [](const BlockCtx& c) { return c.bs.gamma().is_transitive() ? 1 : 0; }},
      {"order_compact", true,
       [](const BlockCtx& c) {
         return c.bs.gamma().is_transitive() && is_order_compact(c.bs) ? 1 : 0;
       }},
      {"all_points_quasi_kings", true,
       [](const BlockCtx& c) {
         return std::all_of(c.r.quasi_king.begin(), c.r.quasi_king.end(),
                            [](Qualifier q) { return q == Qualifier::every_point; })
                    ? 1
                    : 0;
       }},
  };
  return facts;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_atoms(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == ',') {
      out.push_back(text.substr(start, i - start));
      start = i + 1;
    } else if (text.compare(i, 2, "&&") == 0) {
      out.push_back(text.substr(start, i - start));
      start = i + 2;
      ++i;
    }
  }
  out.push_back(text.substr(start));
  return out;
}

}  // namespace

std::vector<FactInfo> registered_facts(SearchDomain domain) {
  std::vector<FactInfo> out;
  if (domain == SearchDomain::tournaments) {
    for (const auto& f : tournament_facts()) out.push_back({f.name, f.boolean});
  } else {
    for (const auto& f : block_facts()) out.push_back({f.name, f.boolean});
  }
  return out;
}

SearchPredicate SearchPredicate::parse(std::string_view text, SearchDomain domain) {
  const std::vector<FactInfo> facts = registered_facts(domain);
  auto lookup = [&](std::string_view name) {
    for (int i = 0; i < static_cast<int>(facts.size()); ++i) {
      if (facts[i].name == name) return i;
    }
    throw Error(ErrorCode::unknown_predicate, "'" + std::string(name) + "'");
  };

  SearchPredicate pred;
  pred.domain_ = domain;
  pred.text_ = std::string(trim(text));
  for (std::string_view raw : split_atoms(text)) {
    std::string_view atom_text = trim(raw);
    if (atom_text.empty()) throw Error(ErrorCode::parse_error, "empty atom in '" + pred.text_ + "'");
    Atom atom;
    if (atom_text.front() == '!') {
      atom.negated = true;
      atom_text = trim(atom_text.substr(1));
    } else if (atom_text.starts_with("not ")) {
      atom.negated = true;
      atom_text = trim(atom_text.substr(4));
    }

    static constexpr std::pair<std::string_view, Op> kOps[] = {
        {">=", Op::ge}, {"<=", Op::le}, {"!=", Op::ne}, {"==", Op::eq},
        {"=", Op::eq},  {">", Op::gt},  {"<", Op::lt},
    };
    std::size_t op_pos = std::string_view::npos;
    std::size_t op_len = 0;
    for (auto [symbol, op] : kOps) {
      const std::size_t pos = atom_text.find(symbol);
      if (pos != std::string_view::npos && (op_pos == std::string_view::npos || pos < op_pos ||
                                            (pos == op_pos && symbol.size() > op_len))) {
        op_pos = pos;
        op_len = symbol.size();
        atom.op = op;
      }
    }

    if (op_pos == std::string_view::npos) {
      atom.lhs = lookup(atom_text);
      if (!facts[atom.lhs].boolean) {
        throw Error(ErrorCode::parse_error, "'" + std::string(atom_text) + "' needs a comparison");
      }
      atom.op = Op::truthy;
      pred.atoms_.push_back(atom);
      continue;
    }

    const std::string_view lhs = trim(atom_text.substr(0, op_pos));
    const std::string_view rhs = trim(atom_text.substr(op_pos + op_len));
    if (rhs.empty()) {
      throw Error(ErrorCode::parse_error, "missing right-hand side in '" + std::string(atom_text) + "'");
    }
    atom.lhs = lookup(lhs);
    if (facts[atom.lhs].boolean) {
      throw Error(ErrorCode::parse_error, "'" + std::string(lhs) + "' is boolean, not a quantity");
    }
    std::int64_t literal = 0;
    const auto [ptr, ec] = std::from_chars(rhs.data(), rhs.data() + rhs.size(), literal);
    if (!rhs.empty() && ec == std::errc() && ptr == rhs.data() + rhs.size()) {
      atom.rhs = literal;
    } else {
      const int idx = lookup(rhs);
      if (facts[idx].boolean) {
        throw Error(ErrorCode::parse_error, "'" + std::string(rhs) + "' is boolean, not a quantity");
      }
      atom.rhs = idx;
    }
    pred.atoms_.push_back(atom);
  }
  return pred;
}

bool SearchPredicate::evaluate(const std::vector<std::int64_t>& facts) const {
  for (const Atom& a : atoms_) {
    const std::int64_t lhs = facts[a.lhs];
    const std::int64_t rhs =
        a.rhs.index() == 0 ? std::get<0>(a.rhs) : facts[std::get<1>(a.rhs)];
    bool v = false;
    switch (a.op) {
      case Op::eq: v = lhs == rhs; break;
      case Op::ne: v = lhs != rhs; break;
      case Op::lt: v = lhs < rhs; break;
      case Op::le: v = lhs <= rhs; break;
      case Op::gt: v = lhs > rhs; break;
      case Op::ge: v = lhs >= rhs; break;
      case Op::truthy: v = lhs != 0; break;
    }
    if (v == a.negated) return false;
  }
  return true;
}

// Only facts referenced by some atom are computed.
bool SearchPredicate::holds(const Tournament& t, const KingReport& report) const {
  if (domain_ != SearchDomain::tournaments) {
    throw Error(ErrorCode::unknown_predicate, "predicate is for block spaces");
  }
  const auto& registry = tournament_facts();
  std::vector<std::int64_t> facts(registry.size(), 0);
  std::vector<bool> needed(registry.size(), false);
  for (const Atom& a : atoms_) {
    needed[a.lhs] = true;
    if (a.rhs.index() == 1) needed[std::get<1>(a.rhs)] = true;
  }
  const TournamentCtx ctx{t, report};
  for (std::size_t i = 0; i < registry.size(); ++i) {
    if (needed[i]) facts[i] = registry[i].value(ctx);
  }
  return evaluate(facts);
}

bool SearchPredicate::holds(const BlockSpace& bs, const SymbolicKingReport& report) const {
  if (domain_ != SearchDomain::blockspaces) {
    throw Error(ErrorCode::unknown_predicate, "predicate is for tournaments");
  }
  const auto& registry = block_facts();
  std::vector<std::int64_t> facts(registry.size(), 0);
  std::vector<bool> needed(registry.size(), false);
  for (const Atom& a : atoms_) {
    needed[a.lhs] = true;
    if (a.rhs.index() == 1) needed[std::get<1>(a.rhs)] = true;
  }
  const BlockCtx ctx{bs, report};
  for (std::size_t i = 0; i < registry.size(); ++i) {
    if (needed[i]) facts[i] = registry[i].value(ctx);
  }
  return evaluate(facts);
}

}  // namespace wsel::lab
