#include "diagramma/language.hpp"

#include "diagramma/errors.hpp"

namespace diagramma {

const char* lang_name(LangId id) {
  switch (id) {
    case LangId::WIRE2D: return "WIRE2D";
    case LangId::WIRE2D_HDEP: return "WIRE2D_HDEP";
    case LangId::BALLSTICK3D: return "BALLSTICK3D";
    case LangId::SPACEFILL3D: return "SPACEFILL3D";
  }
  return "?";
}

std::optional<LangId> lang_from_name(const std::string& name) {
  if (name == "WIRE2D") return LangId::WIRE2D;
  if (name == "WIRE2D_HDEP") return LangId::WIRE2D_HDEP;
  if (name == "BALLSTICK3D") return LangId::BALLSTICK3D;
  if (name == "SPACEFILL3D") return LangId::SPACEFILL3D;
  return std::nullopt;
}

const SymbolDef* InterpretedLanguage::find_symbol(const std::string& name) const {
  auto it = vocabulary.find(name);
  return it == vocabulary.end() ? nullptr : &it->second;
}

const SymbolDef& InterpretedLanguage::symbol(const std::string& name) const {
  if (const SymbolDef* def = find_symbol(name)) return *def;
  throw DomainError("symbol '" + name + "' not in vocabulary of " + lang_name(id));
}

std::set<std::string> InterpretedLanguage::it_elements() const {
  std::set<std::string> out;
  for (const std::string& type : it_types)
    if (auto [kind, arg] = split_symbol(type); kind == "atom") out.insert(arg);
  return out;
}

std::set<int> InterpretedLanguage::dt_orders() const {
  std::set<int> out;
  for (const std::string& type : dt_types)
    if (auto [kind, arg] = split_symbol(type); kind == "bond") out.insert(std::stoi(arg));
  return out;
}

std::pair<std::string, std::string> split_symbol(const std::string& symbol_name) {
  auto colon = symbol_name.find(':');
  if (colon == std::string::npos) return {symbol_name, ""};
  return {symbol_name.substr(0, colon), symbol_name.substr(colon + 1)};
}

namespace {

void add_atom_symbols(InterpretedLanguage& lang, const ElementTable& table,
                      const std::string& prefix, int arity, bool include_hydrogen) {
  for (const std::string& el : table.symbols()) {
    if (!include_hydrogen && el == "H") continue;
    SymbolDef def;
    def.name = prefix + ":" + el;
    def.kind = SymbolKind::IT;
    def.mapped_type = "atom:" + el;
    def.geometry_arity = arity;
    lang.it_types.insert(def.mapped_type);
    lang.vocabulary[def.name] = std::move(def);
  }
}

void add_bond_symbols(InterpretedLanguage& lang, const std::string& prefix) {
  for (int order = 1; order <= 3; ++order) {
    SymbolDef def;
    def.name = prefix + ":" + std::to_string(order);
    def.kind = SymbolKind::DT;
    def.mapped_type = "bond:" + std::to_string(order);
    def.geometry_arity = 0;
    lang.dt_types.insert(def.mapped_type);
    lang.vocabulary[def.name] = std::move(def);
  }
}

}  // namespace

InterpretedLanguage builtin_language(LangId id, const ElementTable& table) {
  InterpretedLanguage lang;
  lang.id = id;
  switch (id) {
    case LangId::WIRE2D:
      add_atom_symbols(lang, table, "vertex", 2, true);
      add_bond_symbols(lang, "line");
      lang.grammar = {"r1", "r2", "r3", "r4", "r5"};
      break;
    case LangId::WIRE2D_HDEP:
      add_atom_symbols(lang, table, "vertex", 2, false);
      add_bond_symbols(lang, "line");
      lang.grammar = {"r1", "r2", "r3", "r4", "r5", "r7"};
      break;
    case LangId::BALLSTICK3D:
      add_atom_symbols(lang, table, "sphere", 3, true);
      add_bond_symbols(lang, "stick");
      lang.grammar = {"r1", "r2", "r3", "r4", "r5"};
      break;
    case LangId::SPACEFILL3D:
      add_atom_symbols(lang, table, "ball", 3, true);
      lang.grammar = {"r4", "r5", "r6"};
      break;
  }
  return lang;
}

}  // namespace diagramma
