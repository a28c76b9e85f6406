#pragma once

#include <optional>
#include <string>
#include <vector>

#include "diagramma/diagram.hpp"
#include "diagramma/element.hpp"
#include "diagramma/registry.hpp"

namespace diagramma {

// The Manchester-syntax subset this module emits and parses back:
// ObjectProperty:, Class: (SubClassOf: named superclass or a some/only
// restriction), Individual: (Types:, Facts:). Restriction fillers are named
// classes or a one-individual nominal in braces.
struct Restriction {
  std::string property;
  enum class Quantifier { Some, Only } quantifier = Quantifier::Some;
  std::string filler;
  bool nominal_filler = false;  // filler written as {Individual}
  bool operator==(const Restriction&) const = default;
};

struct ClassDecl {
  std::string name;
  std::optional<std::string> superclass;
  std::vector<Restriction> restrictions;
  bool operator==(const ClassDecl&) const = default;
};

struct FactAssertion {
  std::string property;
  std::string value;
  bool operator==(const FactAssertion&) const = default;
};

struct IndividualDecl {
  std::string name;
  std::string type;
  std::vector<FactAssertion> facts;
  bool operator==(const IndividualDecl&) const = default;
};

struct AxiomSet {
  std::vector<std::string> object_properties;
  std::vector<ClassDecl> classes;
  std::vector<IndividualDecl> individuals;
  bool operator==(const AxiomSet&) const = default;

  const ClassDecl* find_class(const std::string& name) const;
};

// Class hierarchy with the aboutness axiom as a value restriction
// ("isAbout only Entity"); legacy emits the existential form
// ("isAbout some Entity") instead. Includes the structural- and
// chemical-diagram classes, one diagram class per built-in language with a
// conformsTo restriction naming the language individual, and the four
// language individuals.
AxiomSet tbox_axioms(bool legacy);

// One individual per diagram: its language's diagram class, exactly one
// conformsTo fact, and an isAbout fact per registry molecule the diagram is
// about. Molecules referenced by isAbout facts are declared as
// MolecularEntity individuals. Diagrams must be well-formed.
AxiomSet abox_axioms(const std::vector<Diagram>& diagrams,
                     const std::vector<std::string>& names, const Registry& registry,
                     const ElementTable& table = ElementTable::builtin());

// Deterministic serialization: properties, then classes, then individuals,
// each alphabetical; UTF-8, LF line endings. With legacy_warnings, every
// individual of a diagram class lacking an isAbout fact gets a warning
// comment (the existential reading leaves such individuals unsatisfiable).
std::string emit_axioms(const AxiomSet& axioms, bool legacy_warnings = false);

std::string emit_tbox(bool legacy);
std::string emit_abox(const std::vector<Diagram>& diagrams, const std::vector<std::string>& names,
                      const Registry& registry, bool legacy,
                      const ElementTable& table = ElementTable::builtin());

// Parses emitted documents back; comments are skipped. Throws ParseError
// with line numbers on unknown keywords or malformed restrictions.
AxiomSet parse_manchester_subset(const std::string& text);

// Local consistency rule for the subset: `only` restrictions impose no
// existence, `some` restrictions demand a matching fact on every individual
// of the class (transitively through superclasses). Returns one message per
// violated (individual, restriction) pair.
std::vector<std::string> check_existential_facts(const AxiomSet& axioms);

}  // namespace diagramma
