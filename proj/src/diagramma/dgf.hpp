#pragma once

#include <string>

#include "diagramma/diagram.hpp"
#include "diagramma/element.hpp"

namespace diagramma {

// DGF v1, line based:
//   dgf 1
//   lang <WIRE2D|WIRE2D_HDEP|BALLSTICK3D|SPACEFILL3D>
//   name <string>                                      (optional)
//   token <id> <symbol> [x=<num> y=<num> [z=<num>]]
//   connect <id> <id>
// '#' starts a comment. Symbols are validated against the declared language's
// vocabulary; positions are recorded as given (presence and dimension are
// grammar rule r4's business, not the parser's).
Diagram parse_dgf(const std::string& text, const ElementTable& table = ElementTable::builtin());

// Writer order: header, lang, name, tokens ascending by id, connects
// ascending by (min, max). Numbers use the shortest exact representation, so
// parse_dgf(write_dgf(d)) == d.
std::string write_dgf(const Diagram& d);

}  // namespace diagramma
