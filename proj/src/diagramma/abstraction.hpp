#pragma once

#include "diagramma/diagram.hpp"
#include "diagramma/element.hpp"
#include "diagramma/molgraph.hpp"
#include "diagramma/wellformed.hpp"

namespace diagramma {

// Semantic reading of a well-formed diagram as a molecular graph: one atom
// per IT token (element from the symbol, atom id = token id), one bond per
// DT token with the order from the symbol, or per derived geometric
// connection (order 1) in SPACEFILL3D. Throws DomainError with the first
// grammar violation when the diagram is ill-formed.
MolecularGraph abstract_diagram(const Diagram& d, const InterpretedLanguage& lang,
                                const ElementTable& table = ElementTable::builtin());

}  // namespace diagramma
