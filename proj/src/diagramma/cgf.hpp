#pragma once

#include <string>

#include "diagramma/element.hpp"
#include "diagramma/molgraph.hpp"

namespace diagramma {

// CGF v1, line based:
//   cgf 1
//   name <string>            (optional)
//   atom <id> <ElementSymbol>
//   bond <id> <id> <1|2|3>
// '#' starts a comment, ids are positive integers. Element symbols must be
// present in the table. Throws ParseError with the offending line number.
MolecularGraph parse_cgf(const std::string& text,
                         const ElementTable& table = ElementTable::builtin());

// Bit-exact writer: header, name, atoms ascending by id, bonds ascending by
// (min id, max id). parse_cgf(write_cgf(g)) is structurally identical to g.
std::string write_cgf(const MolecularGraph& g);

}  // namespace diagramma
