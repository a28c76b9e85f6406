#include "diagramma/feasibility.hpp"

#include <algorithm>
#include <sstream>

namespace diagramma {

const char* feasibility_label(Feasibility f) {
  switch (f) {
    case Feasibility::Known: return "Known";
    case Feasibility::Hypothetical: return "Hypothetical";
    case Feasibility::Infeasible: return "Infeasible";
    case Feasibility::Impossible: return "Impossible";
  }
  return "?";
}

FeasibilityResult classify_feasibility(const MolecularGraph& g, const Registry& registry,
                                       const ElementTable& table) {
  if (g.atom_count() == 0) return {Feasibility::Impossible, "empty graph is not a molecule"};

  for (const auto& [id, symbol] : g.atoms()) {
    const Element& e = table.at(symbol);
    int v = g.valence(id);
    if (v > e.max_valence) {
      std::ostringstream detail;
      detail << "valence " << v << " > max " << e.max_valence << " for " << symbol << " (atom "
             << id << ")";
      return {Feasibility::Impossible, detail.str()};
    }
  }
  if (!g.connected())
    return {Feasibility::Impossible, "graph is disconnected; a molecule is a single connected graph"};

  for (const auto& [id, symbol] : g.atoms()) {
    const Element& e = table.at(symbol);
    int v = g.valence(id);
    if (!std::binary_search(e.allowed_valences.begin(), e.allowed_valences.end(), v)) {
      std::ostringstream detail;
      detail << "valence " << v << " of " << symbol << " (atom " << id << ") not in allowed set {";
      for (std::size_t k = 0; k < e.allowed_valences.size(); ++k) {
        if (k) detail << ",";
        detail << e.allowed_valences[k];
      }
      detail << "}";
      return {Feasibility::Infeasible, detail.str()};
    }
  }

  if (auto match = registry.lookup(g)) return {Feasibility::Known, "registry match: " + *match};
  return {Feasibility::Hypothetical, "all valences allowed; no registry match"};
}

}  // namespace diagramma
