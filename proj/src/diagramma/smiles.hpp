#pragma once

#include <string>

#include "diagramma/element.hpp"
#include "diagramma/molgraph.hpp"

namespace diagramma {

// SMILES subset: elements C N O S P F Cl Br I H, branches, single-digit ring
// closures, bond symbols - = #. No aromatic lowercase, charges, isotopes or
// stereo marks. Implicit hydrogens are added so every heavy atom reaches the
// smallest allowed valence >= its explicit bond-order sum.
MolecularGraph parse_smiles_subset(const std::string& s,
                                   const ElementTable& table = ElementTable::builtin());

}  // namespace diagramma
