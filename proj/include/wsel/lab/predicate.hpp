#pragma once

// Search predicates: conjunctions of atoms over registered facts.
//
//   atom  := ['!'] name                   boolean fact
//          | ['!'] name op (name | int)   quantity comparison
//   op    := = == != < <= > >=
//   pred  := atom { ('&&' | ',') atom }
//
// e.g. "quasi_king_count > king_count", "has_emperor && king_count != 1".

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "wsel/blockspace.hpp"
#include "wsel/tournament.hpp"

namespace wsel::lab {

enum class SearchDomain { tournaments, blockspaces };

struct FactInfo {
  std::string name;
  bool boolean = false;
};

/// Registered fact names for a domain, in registry order.
std::vector<FactInfo> registered_facts(SearchDomain domain);

class SearchPredicate {
 public:
  /// Throws UnknownPredicate for unregistered names, ParseError for malformed
  /// atoms or booleans used as quantities (and vice versa).
  static SearchPredicate parse(std::string_view text, SearchDomain domain);

  SearchDomain domain() const { return domain_; }
  const std::string& text() const { return text_; }

  bool holds(const Tournament& t, const KingReport& report) const;
  bool holds(const BlockSpace& bs, const SymbolicKingReport& report) const;

 private:
  enum class Op { eq, ne, lt, le, gt, ge, truthy };
  struct Atom {
    bool negated = false;
    int lhs = 0;
    Op op = Op::truthy;
    std::variant<std::int64_t, int> rhs;  // literal or fact index
  };

  bool evaluate(const std::vector<std::int64_t>& facts) const;

  SearchDomain domain_ = SearchDomain::tournaments;
  std::string text_;
  std::vector<Atom> atoms_;
};

}  // namespace wsel::lab
