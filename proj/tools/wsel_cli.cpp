// wsel: kings, quasi-kings and selection topologies from the command line.
//
// Machine output goes to stdout as JSON lines, human summaries to stderr.
// Exit codes: 0 pass / found as expected, 1 suite failure or unexpected
// search outcome, 2 usage or input error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "wsel/blockspace.hpp"
#include "wsel/enumerate.hpp"
#include "wsel/error.hpp"
#include "wsel/lab/export.hpp"
#include "wsel/lab/json_io.hpp"
#include "wsel/lab/search.hpp"
#include "wsel/lab/suites.hpp"
#include "wsel/seltopo.hpp"

namespace {

using nlohmann::json;
using namespace wsel;
using namespace wsel::lab;

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

json read_input(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::parse_error, "cannot open '" + path + "'");
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  return parse_json(text);
}

void warn_completed(bool completed) {
  if (completed) std::cerr << "warning: open family was not a topology; completed under union/intersection\n";
}

json analyze_blockspace(const BlockSpace& bs) {
  json out{{"kind", "blockspace"}, {"blockspace", encode(bs)}, {"report", encode(symbolic_king_report(bs))}};
  if (bs.gamma().is_transitive()) {
    json cuts = json::array();
    for (CutKind c : cut_kinds(bs)) cuts.push_back(std::string(to_string(c)));
    json comps = json::array();
    for (PointSet c : block_components(bs)) comps.push_back(encode(c));
    out["glued_order"] = glued_order(bs);
    out["cuts"] = cuts;
    out["components"] = comps;
    out["order_compact"] = is_order_compact(bs);
    out["decomposition"] = encode(decomposition_tournament(bs));
  }
  if (bs.size() <= kMaxFamilyBlocks) out["block_quasi_king_space"] = block_quasi_king_space(bs);
  return out;
}

json analyze_tournament(const Tournament& t, bool witnesses) {
  const KingReport report = king_report(t, witnesses ? Witnesses::all : Witnesses::none);
  return {{"kind", "tournament"},
          {"tournament", encode(t)},
          {"report", encode(report)},
          {"reach_set_quasi_king", quasi_king_via_reach_sets(t)},
          {"selection_topology_discrete", selection_topology(t).is_discrete()}};
}

int cmd_analyze(const std::string& path, bool witnesses) {
  const json in = read_input(path);
  json out;
  if (in.contains("blocks")) {
    out = analyze_blockspace(decode_blockspace(in));
  } else if (in.contains("parts")) {
    const PartitionedSelection p = decode_partition(in);
    out = analyze_tournament(lexsum(p), witnesses);
    out["kind"] = "partition";
  } else if (in.contains("edges")) {
    out = analyze_tournament(decode_tournament(in), witnesses);
  } else {
    throw Error(ErrorCode::parse_error, "expected a tournament, partition or block space");
  }
  std::cout << out.dump() << '\n';
  std::cerr << "analyzed " << out["kind"].get<std::string>() << '\n';
  return 0;
}

int cmd_enum(int n, bool labeled) {
  std::size_t count = 0;
  enumerate_tournaments(n, !labeled, [&](const Tournament& t) {
    std::cout << encode(t).dump() << '\n';
    ++count;
  });
  std::cerr << count << (labeled ? " labeled tournaments" : " isomorphism classes") << " on " << n
            << " points\n";
  return 0;
}

int cmd_search(const std::string& pred_text, const std::string& domain, int min_size, int max_size,
               const std::string& mode_text, const std::string& expect) {
  const SearchDomain d = domain == "blockspaces" ? SearchDomain::blockspaces : SearchDomain::tournaments;
  const SearchPredicate pred = SearchPredicate::parse(pred_text, d);
  const SearchMode mode = mode_text == "count" ? SearchMode::count
                          : mode_text == "all" ? SearchMode::all
                                               : SearchMode::first;
  std::size_t matches = 0;
  std::size_t examined = 0;
  if (d == SearchDomain::tournaments) {
    const auto r = search_tournaments(pred, min_size, max_size, mode);
    for (const Tournament& t : r.witnesses) std::cout << json{{"witness", encode(t)}}.dump() << '\n';
    matches = r.matches;
    examined = r.examined;
  } else {
    const auto r = search_blockspaces(pred, min_size, max_size, mode);
    for (const BlockSpace& bs : r.witnesses) std::cout << json{{"witness", encode(bs)}}.dump() << '\n';
    matches = r.matches;
    examined = r.examined;
  }
  std::cout << json{{"predicate", pred.text()}, {"matches", matches}, {"examined", examined}}.dump()
            << '\n';
  std::cerr << matches << " match(es) among " << examined << " candidates\n";
  if (expect == "found" && matches == 0) return kExitFailure;
  if (expect == "empty" && matches != 0) return kExitFailure;
  return 0;
}

int cmd_check(const std::string& path, bool strict) {
  bool completed = false;
  const SelectionOnSpace s = decode_pairing(read_input(path), strict, &completed);
  warn_completed(completed);
  std::cout << encode(check_continuity(s)).dump() << '\n';
  return 0;
}

int cmd_suite(const std::string& name, const SuiteBounds& bounds, bool serial) {
  const SuiteResult r = run_suite(name, bounds, serial ? Exec::serial : Exec::parallel);
  std::cout << encode(r).dump() << '\n';
  std::cerr << r.name << ": " << (r.passed() ? "PASS" : "FAIL") << ", " << r.cases << " cases, "
            << r.failures.size() << " failures, " << r.wall_seconds << " s, seed " << r.seed << '\n';
  return r.passed() ? 0 : kExitFailure;
}

int cmd_export(const std::string& path, const std::string& format, bool strict) {
  const json in = read_input(path);
  Exportable obj = Tournament();
  if (in.contains("blocks")) {
    obj = decode_blockspace(in);
  } else if (in.contains("parts")) {
    obj = decode_partition(in);
  } else if (in.contains("tournament") && in.contains("topology")) {
    bool completed = false;
    obj = decode_pairing(in, strict, &completed);
    warn_completed(completed);
  } else if (in.contains("opens")) {
    bool completed = false;
    obj = decode_topology(in, strict, &completed);
    warn_completed(completed);
  } else if (in.contains("edges")) {
    const Tournament t = decode_tournament(in);
    obj = format == "dot" ? Exportable(AnalyzedTournament{t, king_report(t)}) : Exportable(t);
  } else {
    throw Error(ErrorCode::parse_error, "unrecognised instance");
  }
  std::string text = export_as(obj, format);
  if (text.empty() || text.back() != '\n') text += '\n';
  std::cout << text;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kings, quasi-kings and selection topologies of weak selections"};
  app.require_subcommand(1);

  std::string path = "-";
  bool witnesses = false;
  bool strict = false;

  auto* analyze = app.add_subcommand("analyze", "King report for a tournament, partition or block space");
  analyze->add_option("input", path, "JSON file, '-' for stdin");
  analyze->add_flag("--witnesses", witnesses, "Attach ≤-chains to every quasi-king");

  int n = 4;
  bool labeled = false;
  auto* enumerate = app.add_subcommand("enum", "Enumerate tournaments as JSON lines");
  enumerate->add_option("-n,--points", n, "Number of points")->required();
  enumerate->add_flag("--labeled", labeled, "All labeled tournaments instead of iso classes");

  std::string pred;
  std::string domain = "tournaments";
  int min_size = 1;
  int max_size = 4;
  std::string mode = "first";
  std::string expect = "any";
  auto* search = app.add_subcommand("search", "Search for witnesses of a predicate");
  search->add_option("--pred", pred, "Predicate, e.g. 'quasi_king_count > king_count'")->required();
  search->add_option("--domain", domain)->check(CLI::IsMember({"tournaments", "blockspaces"}));
  search->add_option("--min", min_size, "Smallest point / block count");
  search->add_option("--max", max_size, "Largest point / block count");
  search->add_option("--mode", mode)->check(CLI::IsMember({"first", "count", "all"}));
  search->add_option("--expect", expect, "Exit 1 unless the outcome matches")
      ->check(CLI::IsMember({"any", "found", "empty"}));

  auto* check = app.add_subcommand("check", "Continuity of a {tournament, topology} pairing");
  check->add_option("input", path, "JSON file, '-' for stdin");
  check->add_flag("--strict", strict, "Reject open families that are not topologies");

  std::string suite_name;
  SuiteBounds bounds;
  bool serial = false;
  bool list = false;
  auto* suite = app.add_subcommand("suite", "Run a named invariant sweep");
  suite->add_option("name", suite_name, "Suite name");
  suite->add_flag("--list", list, "List suite names");
  suite->add_option("--max-n", bounds.max_n);
  suite->add_option("--random-cases", bounds.random_cases);
  suite->add_option("--random-max-n", bounds.random_max_n);
  suite->add_option("--max-blocks", bounds.max_blocks);
  suite->add_option("--density", bounds.density);
  suite->add_option("--seed", bounds.seed);
  suite->add_flag("--serial", serial, "Use the serial reference path");

  std::string format = "json";
  auto* exporter = app.add_subcommand("export", "Re-encode an instance as JSON or DOT");
  exporter->add_option("input", path, "JSON file, '-' for stdin");
  exporter->add_option("--format", format, "json or dot");
  exporter->add_flag("--strict", strict, "Reject open families that are not topologies");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*analyze) return cmd_analyze(path, witnesses);
    if (*enumerate) return cmd_enum(n, labeled);
    if (*search) return cmd_search(pred, domain, min_size, max_size, mode, expect);
    if (*check) return cmd_check(path, strict);
    if (*suite) {
      if (list) {
        for (const std::string& s : suite_names()) std::cout << s << '\n';
        return 0;
      }
      if (suite_name.empty()) {
        std::cerr << "suite: a name is required (see --list)\n";
        return kExitUsage;
      }
      return cmd_suite(suite_name, bounds, serial);
    }
    if (*exporter) return cmd_export(path, format, strict);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
