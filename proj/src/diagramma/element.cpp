#include "diagramma/element.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "diagramma/errors.hpp"

namespace diagramma {

namespace {

bool valid_symbol(const std::string& s) {
  if (s.empty() || s.size() > 3) return false;
  if (!std::isupper(static_cast<unsigned char>(s[0]))) return false;
  return std::all_of(s.begin() + 1, s.end(),
                     [](unsigned char c) { return std::islower(c); });
}

void check_element(const Element& e) {
  if (!valid_symbol(e.symbol)) throw DomainError("invalid element symbol '" + e.symbol + "'");
  if (e.allowed_valences.empty())
    throw DomainError("element " + e.symbol + ": allowed valence set is empty");
  for (int v : e.allowed_valences) {
    if (v < 0 || v > e.max_valence)
      throw DomainError("element " + e.symbol + ": allowed valence " + std::to_string(v) +
                        " outside [0, max " + std::to_string(e.max_valence) + "]");
  }
  if (e.covalent_radius_pm <= 0.0)
    throw DomainError("element " + e.symbol + ": covalent radius must be positive");
}

ElementTable make_builtin() {
  ElementTable t;
  t.add({"C", {4}, 4, 77.0});
  t.add({"N", {3}, 3, 75.0});
  t.add({"O", {2}, 2, 73.0});
  t.add({"H", {1}, 1, 37.0});
  t.add({"S", {2, 4, 6}, 6, 103.0});
  t.add({"P", {3, 5}, 5, 110.0});
  t.add({"F", {1}, 1, 71.0});
  t.add({"Cl", {1}, 1, 99.0});
  t.add({"Br", {1}, 1, 114.0});
  t.add({"I", {1}, 1, 133.0});
  t.add({"He", {0}, 0, 32.0});
  return t;
}

}  // namespace

const ElementTable& ElementTable::builtin() {
  static const ElementTable table = make_builtin();
  return table;
}

ElementTable ElementTable::parse(const std::string& text) {
  ElementTable table;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string symbol, allowed;
    int max = 0;
    double radius = 0.0;
    if (!(fields >> symbol)) continue;  // blank line
    if (!(fields >> allowed >> max >> radius))
      throw ParseError("expected '<symbol> <allowed,comma-sep> <max> <radius-pm>'", lineno);
    std::string rest;
    if (fields >> rest) throw ParseError("trailing content '" + rest + "'", lineno);

    Element e;
    e.symbol = symbol;
    e.max_valence = max;
    e.covalent_radius_pm = radius;
    std::istringstream vals(allowed);
    std::string item;
    while (std::getline(vals, item, ',')) {
      try {
        std::size_t used = 0;
        int v = std::stoi(item, &used);
        if (used != item.size()) throw std::invalid_argument(item);
        e.allowed_valences.push_back(v);
      } catch (const std::exception&) {
        throw ParseError("bad valence '" + item + "'", lineno);
      }
    }
    try {
      table.add(std::move(e));
    } catch (const DomainError& err) {
      throw ParseError(err.what(), lineno);
    }
  }
  if (table.size() == 0) throw ParseError("valence table is empty");
  return table;
}

void ElementTable::add(Element element) {
  check_element(element);
  std::sort(element.allowed_valences.begin(), element.allowed_valences.end());
  element.allowed_valences.erase(
      std::unique(element.allowed_valences.begin(), element.allowed_valences.end()),
      element.allowed_valences.end());
  auto [it, inserted] = elements_.try_emplace(element.symbol, std::move(element));
  if (!inserted) throw DomainError("duplicate element " + it->first);
}

bool ElementTable::contains(const std::string& symbol) const {
  return elements_.count(symbol) > 0;
}

const Element& ElementTable::at(const std::string& symbol) const {
  auto it = elements_.find(symbol);
  if (it == elements_.end()) throw DomainError("unknown element '" + symbol + "'");
  return it->second;
}

const Element* ElementTable::find(const std::string& symbol) const {
  auto it = elements_.find(symbol);
  return it == elements_.end() ? nullptr : &it->second;
}

std::vector<std::string> ElementTable::symbols() const {
  std::vector<std::string> out;
  out.reserve(elements_.size());
  for (const auto& [sym, e] : elements_) out.push_back(sym);
  return out;
}

}  // namespace diagramma
