#include "diagramma/smiles.hpp"

#include <array>
#include <map>
#include <vector>

#include "diagramma/errors.hpp"

namespace diagramma {

namespace {

constexpr std::array<const char*, 10> kSubsetElements = {"C", "N", "O",  "S", "P",
                                                         "F", "Cl", "Br", "I", "H"};

bool subset_element(const std::string& sym) {
  for (const char* e : kSubsetElements)
    if (sym == e) return true;
  return false;
}

struct PendingRing {
  AtomId atom;
  int order;  // 0 = unspecified
};

}  // namespace

MolecularGraph parse_smiles_subset(const std::string& s, const ElementTable& table) {
  if (s.empty()) throw ParseError("empty SMILES string");

  MolecularGraph g;
  std::vector<AtomId> branch_stack;
  std::map<char, PendingRing> open_rings;
  AtomId prev = 0;       // 0 = no previous atom
  int pending_order = 0;  // bond symbol awaiting its target, 0 = default single
  AtomId next_id = 1;

  auto bond_order_symbol = [](char c) {
    switch (c) {
      case '-': return 1;
      case '=': return 2;
      case '#': return 3;
      default: return 0;
    }
  };

  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (int order = bond_order_symbol(c); order != 0) {
      if (pending_order != 0) throw ParseError("two consecutive bond symbols at position " +
                                               std::to_string(i + 1));
      pending_order = order;
      ++i;
      continue;
    }
    if (c == '(') {
      if (prev == 0) throw ParseError("branch before any atom");
      if (pending_order != 0) throw ParseError("bond symbol before '('");
      branch_stack.push_back(prev);
      ++i;
      continue;
    }
    if (c == ')') {
      if (branch_stack.empty()) throw ParseError("unbalanced parenthesis: unexpected ')'");
      if (pending_order != 0) throw ParseError("dangling bond symbol before ')'");
      prev = branch_stack.back();
      branch_stack.pop_back();
      ++i;
      continue;
    }
    if (c >= '0' && c <= '9') {
      if (prev == 0) throw ParseError("ring closure digit before any atom");
      auto it = open_rings.find(c);
      if (it == open_rings.end()) {
        open_rings[c] = {prev, pending_order};
      } else {
        PendingRing open = it->second;
        open_rings.erase(it);
        int order = 1;
        if (open.order != 0 && pending_order != 0 && open.order != pending_order)
          throw ParseError(std::string("conflicting bond orders on ring closure ") + c);
        if (open.order != 0) order = open.order;
        if (pending_order != 0) order = pending_order;
        try {
          g.add_bond(open.atom, prev, order);
        } catch (const DomainError& e) {
          throw ParseError(e.what());
        }
      }
      pending_order = 0;
      ++i;
      continue;
    }
    if (c >= 'A' && c <= 'Z') {
      std::string sym(1, c);
      if (i + 1 < s.size() && s[i + 1] >= 'a' && s[i + 1] <= 'z') sym += s[i + 1];
      if (!subset_element(sym))
        throw ParseError("unknown element '" + sym + "' at position " + std::to_string(i + 1));
      if (!table.contains(sym))
        throw ParseError("element '" + sym + "' missing from valence table");
      AtomId id = next_id++;
      g.add_atom(id, sym);
      if (prev != 0) {
        try {
          g.add_bond(prev, id, pending_order == 0 ? 1 : pending_order);
        } catch (const DomainError& e) {
          throw ParseError(e.what());
        }
      } else if (pending_order != 0) {
        throw ParseError("bond symbol before first atom");
      }
      prev = id;
      pending_order = 0;
      i += sym.size();
      continue;
    }
    throw ParseError(std::string("unexpected character '") + c + "' at position " +
                     std::to_string(i + 1));
  }

  if (!branch_stack.empty()) throw ParseError("unbalanced parenthesis: missing ')'");
  if (!open_rings.empty()) {
    std::string digits;
    for (const auto& [digit, ring] : open_rings) digits += digit;
    throw ParseError("unmatched ring closure digit(s) " + digits);
  }
  if (pending_order != 0) throw ParseError("dangling bond symbol at end of input");

  // Hydrogen completion for heavy atoms.
  std::vector<std::pair<AtomId, int>> to_add;
  for (const auto& [id, sym] : g.atoms()) {
    if (sym == "H") continue;
    const Element& e = table.at(sym);
    int explicit_sum = g.valence(id);
    if (explicit_sum > e.max_valence)
      throw ParseError("explicit bonds on " + sym + " sum to " + std::to_string(explicit_sum) +
                       ", exceeding max valence " + std::to_string(e.max_valence));
    int target = -1;
    for (int v : e.allowed_valences)
      if (v >= explicit_sum) { target = v; break; }
    if (target < 0)
      throw ParseError("no allowed valence of " + sym + " can absorb " +
                       std::to_string(explicit_sum) + " explicit bonds");
    if (target > explicit_sum) to_add.emplace_back(id, target - explicit_sum);
  }
  for (const auto& [heavy, count] : to_add) {
    for (int k = 0; k < count; ++k) {
      AtomId h = next_id++;
      g.add_atom(h, "H");
      g.add_bond(heavy, h, 1);
    }
  }
  return g;
}

}  // namespace diagramma
