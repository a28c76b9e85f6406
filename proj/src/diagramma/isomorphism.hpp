#pragma once

#include <map>
#include <optional>

#include "diagramma/molgraph.hpp"

namespace diagramma {

using AtomBijection = std::map<AtomId, AtomId>;

// Element- and bond-order-preserving bijection from a's atoms onto b's, or
// nullopt when none exists. Backtracking search ordered by rarest
// (element, degree, incident-order multiset) signature first.
std::optional<AtomBijection> find_isomorphism(const MolecularGraph& a, const MolecularGraph& b);

// True iff the bijection maps a onto b exactly (elements, bond presence and
// orders in both directions). Used by tests to revalidate witnesses.
bool bijection_preserves(const MolecularGraph& a, const MolecularGraph& b,
                         const AtomBijection& mapping);

}  // namespace diagramma
