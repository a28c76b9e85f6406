#include "diagramma/isomorphism.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace diagramma {

namespace {

struct Signature {
  std::string element;
  std::vector<int> orders;  // sorted incident orders
  auto operator<=>(const Signature&) const = default;
};

std::map<AtomId, Signature> signatures(const MolecularGraph& g) {
  std::map<AtomId, Signature> out;
  for (const auto& [id, element] : g.atoms()) out[id] = {element, {}};
  for (const Bond& bond : g.bonds()) {
    out[bond.a].orders.push_back(bond.order);
    out[bond.b].orders.push_back(bond.order);
  }
  for (auto& [id, sig] : out) std::sort(sig.orders.begin(), sig.orders.end());
  return out;
}

struct Matcher {
  const MolecularGraph& a;
  const MolecularGraph& b;
  std::map<AtomId, Signature> sig_a;
  std::map<AtomId, Signature> sig_b;
  std::vector<AtomId> order;  // a's atoms in assignment order
  AtomBijection forward;
  std::set<AtomId> used_b;

  bool consistent(AtomId va, AtomId vb) const {
    if (sig_a.at(va) != sig_b.at(vb)) return false;
    for (const auto& [pa, pb] : forward)
      if (a.bond_order(va, pa) != b.bond_order(vb, pb)) return false;
    return true;
  }

  bool extend(std::size_t depth) {
    if (depth == order.size()) return true;
    AtomId va = order[depth];
    for (const auto& [vb, element] : b.atoms()) {
      if (used_b.count(vb) || !consistent(va, vb)) continue;
      forward[va] = vb;
      used_b.insert(vb);
      if (extend(depth + 1)) return true;
      forward.erase(va);
      used_b.erase(vb);
    }
    return false;
  }
};

}  // namespace

std::optional<AtomBijection> find_isomorphism(const MolecularGraph& a, const MolecularGraph& b) {
  if (a.atom_count() != b.atom_count() || a.bond_count() != b.bond_count()) return std::nullopt;
  if (a.atom_count() == 0) return AtomBijection{};

  Matcher m{a, b, signatures(a), signatures(b), {}, {}, {}};

  // The signature multisets must agree; count rarity while we are at it.
  std::map<Signature, int> freq;
  for (const auto& [id, sig] : m.sig_b) ++freq[sig];
  for (const auto& [id, sig] : m.sig_a)
    if (--freq[sig] < 0) return std::nullopt;

  // Assignment order: start at the rarest signature, then grow through
  // neighbours so the adjacency constraints bind as early as possible.
  std::map<AtomId, std::vector<AtomId>> adj;
  for (const Bond& bond : a.bonds()) {
    adj[bond.a].push_back(bond.b);
    adj[bond.b].push_back(bond.a);
  }
  std::map<Signature, int> rarity;
  for (const auto& [id, sig] : m.sig_a) ++rarity[sig];
  std::set<AtomId> placed;
  while (placed.size() < a.atom_count()) {
    AtomId best = 0;
    bool best_touches = false;
    int best_rarity = 0;
    for (const auto& [id, element] : a.atoms()) {
      if (placed.count(id)) continue;
      bool touches = std::any_of(adj[id].begin(), adj[id].end(),
                                 [&](AtomId n) { return placed.count(n) > 0; });
      int r = rarity[m.sig_a.at(id)];
      if (best == 0 || std::tuple(!touches, r, id) < std::tuple(!best_touches, best_rarity, best)) {
        best = id;
        best_touches = touches;
        best_rarity = r;
      }
    }
    placed.insert(best);
    m.order.push_back(best);
  }

  if (!m.extend(0)) return std::nullopt;
  return m.forward;
}

bool bijection_preserves(const MolecularGraph& a, const MolecularGraph& b,
                         const AtomBijection& mapping) {
  if (mapping.size() != a.atom_count() || a.atom_count() != b.atom_count()) return false;
  if (a.bond_count() != b.bond_count()) return false;
  std::set<AtomId> image;
  for (const auto& [va, vb] : mapping) {
    if (!a.has_atom(va) || !b.has_atom(vb)) return false;
    if (!image.insert(vb).second) return false;
    if (a.element_of(va) != b.element_of(vb)) return false;
  }
  for (const Bond& bond : a.bonds()) {
    auto other = b.bond_order(mapping.at(bond.a), mapping.at(bond.b));
    if (!other || *other != bond.order) return false;
  }
  return true;
}

}  // namespace diagramma
