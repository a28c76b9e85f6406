#include "diagramma/molgraph.hpp"

#include <algorithm>

#include "diagramma/errors.hpp"

namespace diagramma {

void MolecularGraph::add_atom(AtomId id, std::string element) {
  if (id <= 0) throw DomainError("atom id must be positive, got " + std::to_string(id));
  auto [it, inserted] = atoms_.try_emplace(id, std::move(element));
  if (!inserted) throw DomainError("duplicate atom id " + std::to_string(id));
}

void MolecularGraph::add_bond(AtomId a, AtomId b, int order) {
  if (a == b) throw DomainError("self-bond on atom " + std::to_string(a));
  if (!has_atom(a)) throw DomainError("bond references missing atom " + std::to_string(a));
  if (!has_atom(b)) throw DomainError("bond references missing atom " + std::to_string(b));
  if (order < 1 || order > 3)
    throw DomainError("bond order must be 1, 2 or 3, got " + std::to_string(order));
  auto [it, inserted] = bonds_.try_emplace(BondKey(a, b), order);
  if (!inserted)
    throw DomainError("duplicate bond between atoms " + std::to_string(it->first.a) + " and " +
                      std::to_string(it->first.b));
}

const std::string& MolecularGraph::element_of(AtomId id) const {
  auto it = atoms_.find(id);
  if (it == atoms_.end()) throw DomainError("unknown atom id " + std::to_string(id));
  return it->second;
}

std::optional<int> MolecularGraph::bond_order(AtomId a, AtomId b) const {
  auto it = bonds_.find(BondKey(a, b));
  if (it == bonds_.end()) return std::nullopt;
  return it->second;
}

std::vector<Bond> MolecularGraph::bonds() const {
  std::vector<Bond> out;
  out.reserve(bonds_.size());
  for (const auto& [key, order] : bonds_) out.push_back({key.a, key.b, order});
  return out;
}

std::vector<Bond> MolecularGraph::incident_bonds(AtomId id) const {
  std::vector<Bond> out;
  for (const auto& [key, order] : bonds_)
    if (key.a == id || key.b == id) out.push_back({key.a, key.b, order});
  return out;
}

int MolecularGraph::valence(AtomId id) const {
  if (!has_atom(id)) throw DomainError("unknown atom id " + std::to_string(id));
  int total = 0;
  for (const auto& [key, order] : bonds_)
    if (key.a == id || key.b == id) total += order;
  return total;
}

bool MolecularGraph::connected() const {
  if (atoms_.empty()) return true;
  std::map<AtomId, std::vector<AtomId>> adj;
  for (const auto& [key, order] : bonds_) {
    adj[key.a].push_back(key.b);
    adj[key.b].push_back(key.a);
  }
  std::set<AtomId> seen;
  std::vector<AtomId> stack{atoms_.begin()->first};
  while (!stack.empty()) {
    AtomId cur = stack.back();
    stack.pop_back();
    if (!seen.insert(cur).second) continue;
    for (AtomId next : adj[cur])
      if (!seen.count(next)) stack.push_back(next);
  }
  return seen.size() == atoms_.size();
}

bool MolecularGraph::identical(const MolecularGraph& other) const {
  return name == other.name && atoms_ == other.atoms_ && bonds_ == other.bonds_;
}

MolecularGraph restrict_graph(const MolecularGraph& g,
                              const std::set<std::string>& kept_elements,
                              const std::function<bool(const Bond&)>& keep_bond) {
  MolecularGraph out;
  out.name = g.name;
  for (const auto& [id, element] : g.atoms())
    if (kept_elements.count(element)) out.add_atom(id, element);
  for (const Bond& bond : g.bonds()) {
    if (!out.has_atom(bond.a) || !out.has_atom(bond.b)) continue;
    if (keep_bond && !keep_bond(bond)) continue;
    out.add_bond(bond.a, bond.b, bond.order);
  }
  return out;
}

MolecularGraph permute_graph(const MolecularGraph& g, const std::map<AtomId, AtomId>& perm) {
  auto mapped = [&perm](AtomId id) {
    auto it = perm.find(id);
    return it == perm.end() ? id : it->second;
  };
  MolecularGraph out;
  out.name = g.name;
  for (const auto& [id, element] : g.atoms()) out.add_atom(mapped(id), element);
  for (const Bond& bond : g.bonds()) out.add_bond(mapped(bond.a), mapped(bond.b), bond.order);
  return out;
}

}  // namespace diagramma
