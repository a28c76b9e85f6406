#include "diagramma/registry.hpp"

#include <sstream>

#include "diagramma/canonical.hpp"
#include "diagramma/cgf.hpp"
#include "diagramma/errors.hpp"
#include "diagramma/textutil.hpp"

namespace diagramma {

Registry Registry::parse(const std::string& text, const ElementTable& table) {
  Registry registry;
  std::istringstream in(text);
  std::string line;
  std::ostringstream block;
  int block_first_line = 1;
  int lineno = 0;
  bool block_empty = true;

  auto flush = [&]() {
    if (block_empty) return;
    MolecularGraph g;
    try {
      g = parse_cgf(block.str(), table);
    } catch (const ParseError& e) {
      throw ParseError(std::string("registry block starting at line ") +
                       std::to_string(block_first_line) + ": " + e.what());
    }
    if (!g.name)
      throw ParseError("registry block starting at line " + std::to_string(block_first_line) +
                       " has no name line");
    try {
      registry.add(*g.name, g);
    } catch (const DomainError& e) {
      throw ParseError(std::string(e.what()) + " (block starting at line " +
                       std::to_string(block_first_line) + ")");
    }
    block.str("");
    block.clear();
    block_empty = true;
  };

  while (std::getline(in, line)) {
    ++lineno;
    if (trim(strip_comment(line)).empty()) {
      flush();
      continue;
    }
    if (block_empty) block_first_line = lineno;
    block << line << "\n";
    block_empty = false;
  }
  flush();
  return registry;
}

void Registry::add(std::string name, MolecularGraph graph) {
  std::string code = canonical_form(graph);
  for (const RegistryEntry& entry : entries_) {
    if (entry.name == name) throw DomainError("duplicate registry name '" + name + "'");
    if (entry.canonical_code == code)
      throw DomainError("registry entry '" + name + "' is isomorphic to existing entry '" +
                        entry.name + "'");
  }
  graph.name = name;
  entries_.push_back({std::move(name), std::move(graph), std::move(code)});
}

std::optional<std::string> Registry::lookup(const MolecularGraph& g) const {
  std::string code = canonical_form(g);
  for (const RegistryEntry& entry : entries_)
    if (entry.canonical_code == code) return entry.name;
  return std::nullopt;
}

std::string Registry::write() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out << "\n";
    out << write_cgf(entries_[i].graph);
  }
  return out.str();
}

std::optional<std::string> registry_lookup(const MolecularGraph& g, const Registry& registry) {
  return registry.lookup(g);
}

}  // namespace diagramma
