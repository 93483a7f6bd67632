#include "wsel/lab/export.hpp"

#include <sstream>

#include "wsel/error.hpp"
#include "wsel/lab/json_io.hpp"

namespace wsel::lab {

std::string to_dot(const Tournament& t, const KingReport* report) {
  std::ostringstream out;
  out << "digraph tournament {\n";
  for (int x = 0; x < t.size(); ++x) {
    out << "  " << x;
    if (report) {
      out << " [king=" << (report->kings.contains(x) ? "true" : "false")
          << ", quasi_king=" << (report->quasi_kings.contains(x) ? "true" : "false")
          << ", emperor=" << (report->emperor == x ? "true" : "false") << "]";
    }
    out << ";\n";
  }
  for (auto [x, y] : t.pairs()) out << "  " << x << " -> " << y << ";\n";
  out << "}\n";
  return out.str();
}

std::string to_dot(const BlockSpace& bs) {
  std::ostringstream out;
  out << "digraph blockspace {\n";
  for (int b = 0; b < bs.size(); ++b) {
    out << "  " << b << " [label=\"" << to_string(bs.block(b).kind);
    if (bs.block(b).kind == BlockKind::finite_chain) out << "(" << bs.block(b).chain_length << ")";
    out << "\", reversed=" << (bs.reversed()[b] ? "true" : "false") << "];\n";
  }
  for (auto [x, y] : bs.gamma().pairs()) out << "  " << x << " -> " << y << ";\n";
  out << "}\n";
  return out.str();
}

std::string export_as(const Exportable& obj, std::string_view format) {
  if (format == "json") {
    return std::visit(
        [](const auto& v) -> std::string {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, AnalyzedTournament>) {
            return json{{"tournament", encode(v.t)}, {"report", encode(v.report)}}.dump();
          } else {
            return encode(v).dump();
          }
        },
        obj);
  }
  if (format == "dot") {
    if (const auto* t = std::get_if<Tournament>(&obj)) return to_dot(*t);
    if (const auto* a = std::get_if<AnalyzedTournament>(&obj)) return to_dot(a->t, &a->report);
    if (const auto* bs = std::get_if<BlockSpace>(&obj)) return to_dot(*bs);
    throw Error(ErrorCode::unsupported_format, "dot export needs a tournament or block space");
  }
  throw Error(ErrorCode::unsupported_format, "unknown format '" + std::string(format) + "'");
}

}  // namespace wsel::lab
