#include "diagramma/randmol.hpp"

#include <algorithm>
#include <random>
#include <vector>

#include "diagramma/errors.hpp"

namespace diagramma {

MolecularGraph random_molecule(std::uint64_t seed, unsigned max_heavy_atoms,
                               const ElementTable& table) {
  if (max_heavy_atoms < 1) throw DomainError("max_heavy_atoms must be >= 1");
  std::mt19937_64 rng(seed);

  // Connectable heavy elements: anything but H with a positive valence budget.
  std::vector<const Element*> pool;
  for (const std::string& sym : table.symbols()) {
    const Element& e = table.at(sym);
    if (sym != "H" && e.allowed_valences.back() >= 1) pool.push_back(&e);
  }
  if (pool.empty()) throw DomainError("valence table has no connectable heavy element");

  auto pick = [&rng](std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
  };

  unsigned target = 1 + static_cast<unsigned>(pick(max_heavy_atoms));

  MolecularGraph g;
  std::vector<AtomId> heavy;
  std::vector<int> budget;  // remaining valence capacity per heavy atom

  auto add_heavy = [&](const Element& e) {
    AtomId id = static_cast<AtomId>(heavy.size()) + 1;
    g.add_atom(id, e.symbol);
    heavy.push_back(id);
    budget.push_back(e.allowed_valences.back());
    return id;
  };

  add_heavy(*pool[pick(pool.size())]);
  for (unsigned k = 1; k < target; ++k) {
    std::vector<std::size_t> open;
    for (std::size_t i = 0; i < heavy.size(); ++i)
      if (budget[i] >= 1) open.push_back(i);
    if (open.empty()) break;  // skeleton saturated, settle for fewer atoms
    const Element& e = *pool[pick(pool.size())];
    AtomId id = add_heavy(e);
    std::size_t parent = open[pick(open.size())];
    g.add_bond(heavy[parent], id, 1);
    --budget[parent];
    --budget[heavy.size() - 1];
  }

  // Occasional bond-order upgrades where both ends have slack.
  for (const Bond& bond : g.bonds()) {
    std::size_t ia = static_cast<std::size_t>(bond.a) - 1;
    std::size_t ib = static_cast<std::size_t>(bond.b) - 1;
    int slack = std::min(budget[ia], budget[ib]);
    if (slack >= 1 && pick(4) == 0) {
      int bump = slack >= 2 && pick(3) == 0 ? 2 : 1;
      // Rebuild the bond at the higher order.
      MolecularGraph next;
      next.name = g.name;
      for (const auto& [id, el] : g.atoms()) next.add_atom(id, el);
      for (const Bond& other : g.bonds()) {
        int order = other.order;
        if (other.a == bond.a && other.b == bond.b) order += bump;
        next.add_bond(other.a, other.b, order);
      }
      g = std::move(next);
      budget[ia] -= bump;
      budget[ib] -= bump;
    }
  }

  // Occasional ring closure between unbonded atoms with slack.
  if (heavy.size() >= 3 && pick(3) == 0) {
    for (int attempt = 0; attempt < 4; ++attempt) {
      std::size_t ia = pick(heavy.size());
      std::size_t ib = pick(heavy.size());
      if (ia == ib || budget[ia] < 1 || budget[ib] < 1) continue;
      if (g.bond_order(heavy[ia], heavy[ib])) continue;
      g.add_bond(heavy[ia], heavy[ib], 1);
      --budget[ia];
      --budget[ib];
      break;
    }
  }

  // Hydrogen completion to the smallest allowed valence.
  AtomId next_id = static_cast<AtomId>(heavy.size()) + 1;
  for (std::size_t i = 0; i < heavy.size(); ++i) {
    const Element& e = table.at(g.element_of(heavy[i]));
    int have = g.valence(heavy[i]);
    int want = -1;
    for (int v : e.allowed_valences)
      if (v >= have) { want = v; break; }
    if (want < 0) throw DomainError("generator exceeded the valence budget");  // unreachable
    for (int k = have; k < want; ++k) {
      AtomId h = next_id++;
      g.add_atom(h, "H");
      g.add_bond(heavy[i], h, 1);
    }
  }
  return g;
}

}  // namespace diagramma
