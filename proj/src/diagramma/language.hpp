#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "diagramma/element.hpp"

namespace diagramma {

enum class LangId { WIRE2D, WIRE2D_HDEP, BALLSTICK3D, SPACEFILL3D };

const char* lang_name(LangId id);
std::optional<LangId> lang_from_name(const std::string& name);

enum class SymbolKind { IT, DT };  // independent vs dependent continuant symbols

// One vocabulary item with its mapped type under the interpretation function.
// geometry_arity is the coordinate dimension required on tokens (0 for
// dependent symbols, which never carry coordinates in the built-in languages).
struct SymbolDef {
  std::string name;         // "sphere:C", "line:2", ...
  SymbolKind kind = SymbolKind::IT;
  std::string mapped_type;  // "atom:C", "bond:2", ...
  int geometry_arity = 0;   // 0, 2 or 3
};

struct LanguageParams {
  double overlap_factor = 1.1;       // spacefill contact threshold multiplier
  double incidence_tolerance = 10.0;  // pm; reserved for a future geometric validator
};

// An interpreted diagrammatic language: vocabulary, named grammar rules, a
// type set partitioned into independent (atom) and dependent (bond) types,
// and the symbol-to-type map carried on the vocabulary entries.
struct InterpretedLanguage {
  LangId id = LangId::WIRE2D;
  std::map<std::string, SymbolDef> vocabulary;
  std::vector<std::string> grammar;  // rule identifiers, see wellformed.hpp
  std::set<std::string> it_types;    // "atom:<El>"
  std::set<std::string> dt_types;    // "bond:<1|2|3>"
  LanguageParams params;

  const SymbolDef* find_symbol(const std::string& name) const;
  const SymbolDef& symbol(const std::string& name) const;  // throws on unknown

  // Element symbols whose atom type belongs to this language's type set.
  std::set<std::string> it_elements() const;
  // Bond orders whose bond type belongs to this language's type set.
  std::set<int> dt_orders() const;
};

// The four fixed built-in languages. Vocabularies are derived from the
// element table (one atom symbol per element). WIRE2D_HDEP is the
// hydrogen-suppressed wireframe: its vocabulary and type set simply omit
// hydrogen, which is what makes coverage ignore hydrogen parts.
InterpretedLanguage builtin_language(LangId id,
                                     const ElementTable& table = ElementTable::builtin());

// "sphere:C" -> ("sphere", "C"); no colon -> (name, "").
std::pair<std::string, std::string> split_symbol(const std::string& symbol_name);

}  // namespace diagramma
