#pragma once

#include <string>

#include "diagramma/diagram.hpp"
#include "diagramma/element.hpp"

namespace diagramma {

// Deterministic SVG for 2D wireframe diagrams: one <line> per stroke (double
// and triple orders draw 2 or 3 parallel strokes), one <text> per vertex with
// its element label. Diagram units are scaled so the median drawn bond is
// 40 px. Throws DomainError on ill-formed or non-2D diagrams; 3D diagrams
// are rendered by projecting first (the CLI does so with a warning).
std::string render_svg(const Diagram& d, const ElementTable& table = ElementTable::builtin());

}  // namespace diagramma
