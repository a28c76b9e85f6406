#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "diagramma/diagram.hpp"
#include "diagramma/element.hpp"
#include "diagramma/molgraph.hpp"

namespace diagramma {

// A part of the target entity: an atom or a bond (bonds are the dependent
// parts, identified by their normalized endpoint pair).
struct PartId {
  enum class Kind { Atom, Bond } kind = Kind::Atom;
  AtomId a = 0;
  AtomId b = 0;  // bond endpoint max; unused for atoms

  static PartId atom(AtomId id) { return {Kind::Atom, id, 0}; }
  static PartId bond(AtomId x, AtomId y) {
    return {Kind::Bond, x < y ? x : y, x < y ? y : x};
  }
  auto operator<=>(const PartId&) const = default;
  std::string to_string() const;
};

// An injective interpretation function from diagram tokens onto parts of the
// target entity, total on the diagram's tokens.
struct Interpretation {
  std::map<TokenId, PartId> token_to_part;
};

struct ClauseStatus {
  bool ok = true;
  std::string message;            // first counterexample when not ok
  std::vector<TokenId> tokens;    // offending tokens, if any
  std::vector<PartId> parts;      // offending parts, if any
};

// Clause-by-clause verdict:
//   clause 1  every token's image instantiates the type its symbol maps to
//   clause 2  direct IT-IT connection on the diagram side iff the images are
//             bonded (only meaningful for languages without DT symbols;
//             vacuous where bonds are drawn as tokens)
//   clause 3  every DT token's image inheres in the images of the IT tokens
//             connected to it
//   clause 4  every part of the entity instantiating a type of the language
//             is in the interpretation's image
struct ClauseReport {
  ClauseStatus clause[4];
  bool ok() const {
    return clause[0].ok && clause[1].ok && clause[2].ok && clause[3].ok;
  }
  std::string summary() const;
};

// True iff the part instantiates a type in the language's type set. Atoms
// instantiate their element's atom type; a bond instantiates its order's
// bond type only when both bearer atoms also instantiate types of the
// language (a hydrogen-suppressed type set has no bond-to-hydrogen types).
bool instantiates_language_type(const MolecularGraph& x, const PartId& part,
                                const InterpretedLanguage& lang);

// Check ι against the four clauses. Requires ι total and injective on d's
// tokens (DomainError otherwise); the diagram need not be well-formed.
ClauseReport verify_interpretation(const Diagram& d, const InterpretedLanguage& lang,
                                   const MolecularGraph& x, const Interpretation& iota,
                                   const ElementTable& table = ElementTable::builtin());

// The decision procedure: some ι satisfying all four clauses, or nullopt.
// Equivalent to a type-preserving isomorphism between the diagram's semantic
// reading and the entity restricted to the language's type set. Requires a
// well-formed diagram (DomainError otherwise).
std::optional<Interpretation> is_about(const Diagram& d, const InterpretedLanguage& lang,
                                       const MolecularGraph& x,
                                       const ElementTable& table = ElementTable::builtin());

// Exhaustive oracle: enumerate injective token-to-part maps and filter by
// verify_interpretation. Guarded to <= 12 tokens and <= 12 parts
// (GuardError beyond).
std::optional<Interpretation> brute_force_is_about(const Diagram& d,
                                                   const InterpretedLanguage& lang,
                                                   const MolecularGraph& x,
                                                   const ElementTable& table =
                                                       ElementTable::builtin());

}  // namespace diagramma
