#pragma once

#include <string>

#include "diagramma/element.hpp"
#include "diagramma/molgraph.hpp"
#include "diagramma/registry.hpp"

namespace diagramma {

// Four-way taxonomy for depicted molecules. Known requires a registry match;
// the other three are decided from the valence table alone.
enum class Feasibility { Known, Hypothetical, Infeasible, Impossible };

struct FeasibilityResult {
  Feasibility cls = Feasibility::Hypothetical;
  std::string detail;
};

const char* feasibility_label(Feasibility f);

// Impossible: a valence exceeds its element's hard maximum, or the graph is
// disconnected (a single molecule is connected; mixtures are out of scope).
// Infeasible: every valence is under the ceiling but one falls outside its
// element's allowed set. Known: registry match up to isomorphism. Otherwise
// Hypothetical. Total on valid graphs.
FeasibilityResult classify_feasibility(const MolecularGraph& g, const Registry& registry,
                                       const ElementTable& table = ElementTable::builtin());

}  // namespace diagramma
