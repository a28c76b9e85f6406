#include "diagramma/canonical.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <sstream>
#include <vector>

namespace diagramma {

namespace {

struct Indexed {
  std::vector<AtomId> ids;                          // index -> atom id
  std::vector<std::string> element;                 // index -> element
  std::vector<std::vector<std::pair<int, int>>> adj;  // index -> (neighbour, order)
};

Indexed index_graph(const MolecularGraph& g) {
  Indexed ix;
  std::map<AtomId, int> pos;
  for (const auto& [id, element] : g.atoms()) {
    pos[id] = static_cast<int>(ix.ids.size());
    ix.ids.push_back(id);
    ix.element.push_back(element);
  }
  ix.adj.resize(ix.ids.size());
  for (const Bond& bond : g.bonds()) {
    int a = pos[bond.a], b = pos[bond.b];
    ix.adj[a].emplace_back(b, bond.order);
    ix.adj[b].emplace_back(a, bond.order);
  }
  return ix;
}

// Rank vertices by (colour, sorted multiset of (order, neighbour colour))
// until the partition stops splitting.
std::vector<int> refine(const Indexed& ix, std::vector<int> colour) {
  const int n = static_cast<int>(ix.ids.size());
  while (true) {
    std::vector<std::pair<std::vector<int>, int>> sig(n);
    for (int v = 0; v < n; ++v) {
      std::vector<int> s;
      s.push_back(colour[v]);
      std::vector<std::pair<int, int>> nb;
      for (auto [w, order] : ix.adj[v]) nb.emplace_back(order, colour[w]);
      std::sort(nb.begin(), nb.end());
      for (auto [order, c] : nb) {
        s.push_back(order);
        s.push_back(c);
      }
      sig[v] = {std::move(s), v};
    }
    auto sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> next(n);
    int rank = 0;
    for (int k = 0; k < n; ++k) {
      if (k > 0 && sorted[k].first != sorted[k - 1].first) ++rank;
      next[sorted[k].second] = rank;
    }
    int old_classes = 1 + *std::max_element(colour.begin(), colour.end());
    if (rank + 1 == old_classes) return next;
    colour = std::move(next);
  }
}

std::string encode(const Indexed& ix, const std::vector<int>& colour) {
  const int n = static_cast<int>(ix.ids.size());
  std::vector<int> order(n);
  for (int v = 0; v < n; ++v) order[colour[v]] = v;  // colours are a permutation here
  std::vector<int> rank(n);
  for (int v = 0; v < n; ++v) rank[v] = colour[v];

  std::ostringstream out;
  for (int k = 0; k < n; ++k) {
    if (k) out << ",";
    out << ix.element[order[k]];
  }
  out << "|";
  std::vector<std::array<int, 3>> edges;
  for (int v = 0; v < n; ++v)
    for (auto [w, o] : ix.adj[v])
      if (rank[v] < rank[w]) edges.push_back({rank[v], rank[w], o});
  std::sort(edges.begin(), edges.end());
  for (std::size_t k = 0; k < edges.size(); ++k) {
    if (k) out << ",";
    out << edges[k][0] << "-" << edges[k][1] << ":" << edges[k][2];
  }
  return out.str();
}

std::string canonical_rec(const Indexed& ix, const std::vector<int>& colour) {
  const int n = static_cast<int>(ix.ids.size());
  int classes = 1 + *std::max_element(colour.begin(), colour.end());
  if (classes == n) return encode(ix, colour);

  // First ambiguous cell: smallest colour with more than one member.
  std::vector<int> count(classes, 0);
  for (int c : colour) ++count[c];
  int target = 0;
  while (count[target] < 2) ++target;

  std::string best;
  for (int v = 0; v < n; ++v) {
    if (colour[v] != target) continue;
    // Individualize v: split it below the rest of its cell.
    std::vector<int> split(n);
    for (int w = 0; w < n; ++w) split[w] = colour[w] * 2 + 1;
    split[v] = colour[v] * 2;
    // Renumber to dense ranks before refining.
    std::vector<int> values = split;
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    for (int w = 0; w < n; ++w)
      split[w] = static_cast<int>(std::lower_bound(values.begin(), values.end(), split[w]) -
                                  values.begin());
    std::string candidate = canonical_rec(ix, refine(ix, split));
    if (best.empty() || candidate < best) best = candidate;
  }
  return best;
}

}  // namespace

std::string canonical_form(const MolecularGraph& g) {
  if (g.atom_count() == 0) return "|";
  Indexed ix = index_graph(g);
  const int n = static_cast<int>(ix.ids.size());

  // Initial colours from (element, degree, sorted incident orders).
  std::vector<std::pair<std::vector<std::string>, int>> sig(n);
  for (int v = 0; v < n; ++v) {
    std::vector<int> orders;
    for (auto [w, o] : ix.adj[v]) orders.push_back(o);
    std::sort(orders.begin(), orders.end());
    std::vector<std::string> s{ix.element[v], std::to_string(orders.size())};
    for (int o : orders) s.push_back(std::to_string(o));
    sig[v] = {std::move(s), v};
  }
  auto sorted = sig;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> colour(n);
  int rank = 0;
  for (int k = 0; k < n; ++k) {
    if (k > 0 && sorted[k].first != sorted[k - 1].first) ++rank;
    colour[sorted[k].second] = rank;
  }
  return canonical_rec(ix, refine(ix, colour));
}

}  // namespace diagramma
