#pragma once

#include <map>
#include <string>
#include <vector>

namespace diagramma {

// One row of the valence table. allowed_valences is kept sorted ascending;
// max_valence is the hard compositional ceiling (anything above it cannot be
// a molecule at all, not merely an unstable one).
struct Element {
  std::string symbol;
  std::vector<int> allowed_valences;
  int max_valence = 0;
  double covalent_radius_pm = 0.0;
};

// The valence table. The built-in table covers the SMILES-subset elements
// plus He; an alternative table can be parsed from text (one element per
// line: "<symbol> <allowed,comma-separated> <max> <radius-pm>").
class ElementTable {
 public:
  static const ElementTable& builtin();
  static ElementTable parse(const std::string& text);

  void add(Element element);

  bool contains(const std::string& symbol) const;
  // Throws DomainError for unknown symbols.
  const Element& at(const std::string& symbol) const;
  const Element* find(const std::string& symbol) const;

  // Symbols in lexicographic order.
  std::vector<std::string> symbols() const;
  std::size_t size() const { return elements_.size(); }

 private:
  std::map<std::string, Element> elements_;
};

}  // namespace diagramma
