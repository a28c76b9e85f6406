#pragma once

#include <set>
#include <string>
#include <vector>

#include "diagramma/diagram.hpp"
#include "diagramma/element.hpp"

namespace diagramma {

struct Violation {
  std::string rule;     // "r1".."r7"
  std::string message;
  std::vector<TokenId> tokens;
};

// Grammar rules, dispatched by the identifiers in the language definition:
//   r1  every DT token has exactly 2 connections, both to IT tokens
//   r2  IT tokens never connect directly to IT tokens
//   r3  at most one DT token per IT-token pair
//   r4  all required positions present, with the required dimension
//   r5  distinct IT tokens have distinct positions
//   r6  no explicit connections (spacefill)
//   r7  no hydrogen symbols (hydrogen-suppressed wireframe)
// The verdict covers linguistic validity only; a grammatically perfect
// diagram may still depict an impossible molecule.
std::vector<Violation> well_formed(const Diagram& d, const InterpretedLanguage& lang);

inline bool is_well_formed(const Diagram& d, const InterpretedLanguage& lang) {
  return well_formed(d, lang).empty();
}

// Connections read off the diagram. For SPACEFILL3D the connection relation
// is geometric: tokens connect iff their spheres overlap, i.e. distance <
// overlap_factor * (radius_a + radius_b) with radii from the element table.
// Other languages return the explicit connection set unchanged. Throws
// DomainError when a required position is missing.
std::set<Connection> derived_connections(const Diagram& d, const InterpretedLanguage& lang,
                                         const ElementTable& table = ElementTable::builtin());

}  // namespace diagramma
