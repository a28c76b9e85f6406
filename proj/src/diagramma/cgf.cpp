#include "diagramma/cgf.hpp"

#include <sstream>

#include "diagramma/errors.hpp"
#include "diagramma/textutil.hpp"

namespace diagramma {

MolecularGraph parse_cgf(const std::string& text, const ElementTable& table) {
  MolecularGraph g;
  bool saw_header = false;
  int lineno = 0;
  std::istringstream in(text);
  std::string raw;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = strip_comment(raw);
    std::istringstream fields(line);
    std::string keyword;
    if (!(fields >> keyword)) continue;

    if (!saw_header) {
      if (keyword != "cgf") throw ParseError("expected 'cgf 1' header", lineno);
      std::string version;
      if (!(fields >> version) || version != "1")
        throw ParseError("unsupported CGF version", lineno);
      require_no_trailing(fields, lineno);
      saw_header = true;
      continue;
    }

    if (keyword == "name") {
      if (g.name) throw ParseError("duplicate name line", lineno);
      std::string value = trim(line.substr(line.find("name") + 4));
      if (value.empty()) throw ParseError("empty name", lineno);
      g.name = value;
    } else if (keyword == "atom") {
      int id = parse_int(fields, "atom id", lineno);
      std::string symbol;
      if (!(fields >> symbol)) throw ParseError("atom line needs an element symbol", lineno);
      require_no_trailing(fields, lineno);
      if (id <= 0) throw ParseError("atom id must be positive", lineno);
      if (!table.contains(symbol)) throw ParseError("unknown element '" + symbol + "'", lineno);
      try {
        g.add_atom(id, symbol);
      } catch (const DomainError& e) {
        throw ParseError(e.what(), lineno);
      }
    } else if (keyword == "bond") {
      int a = parse_int(fields, "bond atom id", lineno);
      int b = parse_int(fields, "bond atom id", lineno);
      int order = parse_int(fields, "bond order", lineno);
      require_no_trailing(fields, lineno);
      if (order < 1 || order > 3) throw ParseError("bond order must be 1, 2 or 3", lineno);
      try {
        g.add_bond(a, b, order);
      } catch (const DomainError& e) {
        throw ParseError(e.what(), lineno);
      }
    } else {
      throw ParseError("unknown keyword '" + keyword + "'", lineno);
    }
  }
  if (!saw_header) throw ParseError("missing 'cgf 1' header");
  return g;
}

std::string write_cgf(const MolecularGraph& g) {
  std::ostringstream out;
  out << "cgf 1\n";
  if (g.name) out << "name " << *g.name << "\n";
  for (const auto& [id, element] : g.atoms()) out << "atom " << id << " " << element << "\n";
  for (const Bond& bond : g.bonds())
    out << "bond " << bond.a << " " << bond.b << " " << bond.order << "\n";
  return out.str();
}

}  // namespace diagramma
