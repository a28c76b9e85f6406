#include "diagramma/abstraction.hpp"

#include "diagramma/errors.hpp"

namespace diagramma {

MolecularGraph abstract_diagram(const Diagram& d, const InterpretedLanguage& lang,
                                const ElementTable& table) {
  std::vector<Violation> violations = well_formed(d, lang);
  if (!violations.empty())
    throw DomainError("diagram is not well-formed: " + violations.front().message);

  MolecularGraph g;
  g.name = d.name;
  for (const auto& [id, token] : d.tokens()) {
    const SymbolDef& def = lang.symbol(token.symbol);
    if (def.kind == SymbolKind::IT) g.add_atom(id, split_symbol(def.mapped_type).second);
  }
  if (lang.id == LangId::SPACEFILL3D) {
    for (const Connection& c : derived_connections(d, lang, table)) g.add_bond(c.a, c.b, 1);
    return g;
  }
  for (const auto& [id, token] : d.tokens()) {
    const SymbolDef& def = lang.symbol(token.symbol);
    if (def.kind != SymbolKind::DT) continue;
    std::vector<TokenId> nb = d.neighbours(id);
    g.add_bond(nb[0], nb[1], std::stoi(split_symbol(def.mapped_type).second));
  }
  return g;
}

}  // namespace diagramma
