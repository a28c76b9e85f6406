#pragma once

#include <cstdint>

#include "diagramma/element.hpp"
#include "diagramma/molgraph.hpp"

namespace diagramma {

// Deterministic in seed. Grows a connected heavy-atom skeleton within each
// element's valence budget, optionally upgrades bond orders and closes rings,
// then hydrogen-completes, so the result is always connected with every
// valence inside its allowed set.
MolecularGraph random_molecule(std::uint64_t seed, unsigned max_heavy_atoms,
                               const ElementTable& table = ElementTable::builtin());

}  // namespace diagramma
