#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "diagramma/diagram.hpp"
#include "diagramma/element.hpp"
#include "diagramma/molgraph.hpp"

namespace diagramma {

// Declarative token/connection rewrite between two built-in languages.
struct RewriteRules {
  std::map<std::string, std::string> it_prefix;  // e.g. sphere -> vertex
  std::map<std::string, std::string> dt_prefix;  // e.g. stick -> line
  bool drop_dt_tokens = false;                   // delete all DT tokens and connections
  std::set<std::string> drop_it_elements;        // delete these IT tokens + incident DT tokens
  bool project_to_2d = false;                    // drop z (orthographic x,y)
};

struct CoarseningFn {
  std::string id;  // "m1", "m2", "m3"
  LangId source_lang;
  LangId target_lang;
  RewriteRules rewrite;
};

// The fixed catalog:
//   m1 BALLSTICK3D -> WIRE2D       spheres to vertices (z dropped), sticks to lines
//   m2 BALLSTICK3D -> SPACEFILL3D  spheres to balls (positions kept), sticks deleted
//   m3 WIRE2D -> WIRE2D_HDEP       hydrogen vertices and their lines deleted
const std::vector<CoarseningFn>& registered_coarsenings();

// Strict partial order on languages induced by the catalog's transitive
// closure: above(a, b) iff some composition of registered coarsenings leads
// from a to b.
bool language_strictly_above(LangId a, LangId b);

// Apply one registered coarsening. Requires d well-formed in the source
// language (DomainError otherwise); the result is well-formed in the target.
Diagram apply_coarsening(const CoarseningFn& m, const Diagram& d,
                         const ElementTable& table = ElementTable::builtin());

// Composition of registered coarsenings from d's language to target, applied
// in order; nullopt when the catalog has no path.
struct CoarsenedDiagram {
  Diagram diagram;
  std::vector<std::string> via;  // coarsening ids in application order
};
std::optional<CoarsenedDiagram> coarsen_to(const Diagram& d, LangId target,
                                           const ElementTable& table = ElementTable::builtin());

// Structural equality up to token re-identification: a symbol-preserving
// isomorphism of the token graphs. Positions are compared (to 1e-6 relative
// tolerance) only when compare_positions is set — layout is presentation for
// 2D wireframes but substance for 3D languages.
bool diagram_structurally_equal(const Diagram& a, const Diagram& b, bool compare_positions);

struct CoarserThanResult {
  bool coarser = false;
  std::string justification;
};

// Def.-9 order on diagrams: d2 is coarser than d1 iff some registered
// composition maps d1 onto a diagram structurally equal to d2 and d1's
// language sits strictly above d2's (there being no registered coarsening
// back). Both diagrams must be well-formed in their languages.
CoarserThanResult coarser_than(const Diagram& d2, const Diagram& d1,
                               const ElementTable& table = ElementTable::builtin());

struct CoarseningCheckReport {
  int clause2_checked = 0;
  int clause2_preserved = 0;
  int clause3_checked = 0;
  int clause3_lifted = 0;
  std::vector<std::string> failures;
  bool ok() const {
    return failures.empty() && clause2_preserved == clause2_checked &&
           clause3_lifted == clause3_checked;
  }
};

// Property check over a sample of (diagram, entity) pairs, diagrams
// well-formed in m's source language:
//   clause 2  if D is about x in the source, m(D) is about x in the target
//   clause 3  for each (m(D), x) pair on the target side, a preimage about x
//             is constructed by lifting (synthetic z for re-embedding,
//             sticks re-added from the entity's bonds, hydrogens re-added
//             from the entity) and checked to map back onto m(D)
CoarseningCheckReport check_coarsening_properties(
    const CoarseningFn& m, const std::vector<std::pair<Diagram, MolecularGraph>>& sample,
    const ElementTable& table = ElementTable::builtin());

// Constructive witness for Def. 8 clause 3: a diagram in m's source language
// with m(lift(d2)) structurally equal to d2 and lift(d2) about x whenever d2
// is about x. Throws DomainError when d2 is not about x.
Diagram lift_through_coarsening(const CoarseningFn& m, const Diagram& d2, const MolecularGraph& x,
                                const ElementTable& table = ElementTable::builtin());

}  // namespace diagramma
