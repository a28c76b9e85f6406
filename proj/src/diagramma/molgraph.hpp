#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "diagramma/element.hpp"

namespace diagramma {

using AtomId = int;

// Unordered atom pair, stored normalized (a < b).
struct BondKey {
  AtomId a = 0;
  AtomId b = 0;

  BondKey() = default;
  BondKey(AtomId x, AtomId y) : a(x < y ? x : y), b(x < y ? y : x) {}
  auto operator<=>(const BondKey&) const = default;
};

struct Bond {
  AtomId a = 0;
  AtomId b = 0;
  int order = 1;  // 1|2|3
};

// Instance-level molecule model: typed atoms, typed bonds. Construction
// enforces the structural invariants (unique ids, no self-bonds, at most one
// bond per pair, endpoints present); chemical plausibility is the feasibility
// classifier's job, not this type's.
class MolecularGraph {
 public:
  std::optional<std::string> name;

  // Throws DomainError on violations.
  void add_atom(AtomId id, std::string element);
  void add_bond(AtomId a, AtomId b, int order);

  bool has_atom(AtomId id) const { return atoms_.count(id) > 0; }
  const std::string& element_of(AtomId id) const;  // throws on unknown id
  std::optional<int> bond_order(AtomId a, AtomId b) const;

  std::size_t atom_count() const { return atoms_.size(); }
  std::size_t bond_count() const { return bonds_.size(); }

  const std::map<AtomId, std::string>& atoms() const { return atoms_; }
  // Ascending by (min id, max id).
  std::vector<Bond> bonds() const;
  std::vector<Bond> incident_bonds(AtomId id) const;

  // Sum of the orders of incident bonds. Throws on unknown id.
  int valence(AtomId id) const;

  // Empty graphs count as connected (there is nothing to separate).
  bool connected() const;

  bool identical(const MolecularGraph& other) const;

 private:
  std::map<AtomId, std::string> atoms_;
  std::map<BondKey, int> bonds_;
};

// Subgraph induced by the kept elements; a bond survives iff both endpoints
// survive and the predicate accepts it. Atom ids are preserved.
MolecularGraph restrict_graph(const MolecularGraph& g,
                              const std::set<std::string>& kept_elements,
                              const std::function<bool(const Bond&)>& keep_bond);

// Re-identify atoms through an id bijection (ids not in the map are kept).
MolecularGraph permute_graph(const MolecularGraph& g, const std::map<AtomId, AtomId>& perm);

}  // namespace diagramma
