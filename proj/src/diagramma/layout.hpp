#pragma once

#include <cstdint>

#include "diagramma/diagram.hpp"
#include "diagramma/element.hpp"
#include "diagramma/molgraph.hpp"

namespace diagramma {

// Draw a molecule as a diagram of the given language. IT tokens reuse the
// atom ids; DT tokens are numbered above them. 3D positions are relaxed
// until the sphere-overlap reading reproduces the bond set exactly (bonded
// pairs overlap, non-bonded pairs clear the threshold with margin), so the
// resulting picture stays faithful when sticks are dropped. WIRE2D_HDEP
// draws the heavy-atom restriction of x. Deterministic in seed; throws
// LayoutError when no satisfying embedding is found.
Diagram render_to_language(const MolecularGraph& x, LangId lang_id,
                           const ElementTable& table = ElementTable::builtin(),
                           std::uint64_t seed = 0);

}  // namespace diagramma
