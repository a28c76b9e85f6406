#pragma once

#include <optional>
#include <string>
#include <vector>

#include "diagramma/element.hpp"
#include "diagramma/molgraph.hpp"

namespace diagramma {

struct RegistryEntry {
  std::string name;
  MolecularGraph graph;
  std::string canonical_code;
};

// Named molecules the artifact treats as known to exist. Lookup is by
// isomorphism class via canonical codes; names and codes are unique.
class Registry {
 public:
  // Concatenated CGF blocks separated by blank lines. Every block needs a
  // name line.
  static Registry parse(const std::string& text,
                        const ElementTable& table = ElementTable::builtin());

  void add(std::string name, MolecularGraph graph);

  std::optional<std::string> lookup(const MolecularGraph& g) const;
  const std::vector<RegistryEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

  std::string write() const;

 private:
  std::vector<RegistryEntry> entries_;
};

// Spec-level alias for Registry::lookup.
std::optional<std::string> registry_lookup(const MolecularGraph& g, const Registry& registry);

}  // namespace diagramma
