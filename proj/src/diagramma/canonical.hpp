#pragma once

#include <string>

#include "diagramma/molgraph.hpp"

namespace diagramma {

// Deterministic canonical code: equal codes iff the graphs are isomorphic
// under an element- and bond-order-preserving bijection. Iterative
// neighbourhood refinement with backtracking individualization of the first
// ambiguous cell; the minimum encoding over all branches is returned.
std::string canonical_form(const MolecularGraph& g);

}  // namespace diagramma
