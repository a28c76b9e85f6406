#include "diagramma/ontology.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

#include "diagramma/aboutness.hpp"
#include "diagramma/errors.hpp"
#include "diagramma/textutil.hpp"
#include "diagramma/wellformed.hpp"

namespace diagramma {

namespace {

const char* diagram_class_for(LangId id) {
  switch (id) {
    case LangId::WIRE2D: return "Wire2DDiagram";
    case LangId::WIRE2D_HDEP: return "Wire2DHDepDiagram";
    case LangId::BALLSTICK3D: return "BallStick3DDiagram";
    case LangId::SPACEFILL3D: return "Spacefill3DDiagram";
  }
  return "?";
}

std::string sanitize_name(const std::string& raw) {
  std::string out;
  for (char c : raw) {
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') out += c;
    else if (c == ' ' || c == '-' || c == '.') out += '_';
  }
  if (out.empty() || std::isdigit(static_cast<unsigned char>(out[0]))) out = "d_" + out;
  return out;
}

void sort_axioms(AxiomSet& a) {
  std::sort(a.object_properties.begin(), a.object_properties.end());
  std::sort(a.classes.begin(), a.classes.end(),
            [](const ClassDecl& l, const ClassDecl& r) { return l.name < r.name; });
  std::sort(a.individuals.begin(), a.individuals.end(),
            [](const IndividualDecl& l, const IndividualDecl& r) { return l.name < r.name; });
}

}  // namespace

const ClassDecl* AxiomSet::find_class(const std::string& name) const {
  for (const ClassDecl& c : classes)
    if (c.name == name) return &c;
  return nullptr;
}

AxiomSet tbox_axioms(bool legacy) {
  AxiomSet a;
  a.object_properties = {"conformsTo", "isAbout"};

  auto cls = [&a](std::string name, std::optional<std::string> super,
                  std::vector<Restriction> restrictions = {}) {
    a.classes.push_back({std::move(name), std::move(super), std::move(restrictions)});
  };
  using Q = Restriction::Quantifier;

  cls("Entity", std::nullopt);
  cls("InformationContentEntity", "Entity",
      {{"isAbout", legacy ? Q::Some : Q::Only, "Entity", false}});
  // Context anchors from the broader information-artifact hierarchy.
  cls("Document", "InformationContentEntity");
  cls("Figure", "InformationContentEntity");
  cls("NarrativeObject", "InformationContentEntity");
  cls("DiagrammaticLanguage", "Entity");
  cls("StructuredEntity", "Entity");
  cls("MolecularEntity", "StructuredEntity");
  cls("StructuralDiagram", "InformationContentEntity",
      {{"isAbout", Q::Only, "StructuredEntity", false},
       {"conformsTo", Q::Some, "DiagrammaticLanguage", false}});
  cls("ChemicalDiagram", "StructuralDiagram",
      {{"isAbout", Q::Only, "MolecularEntity", false}});
  for (LangId id : {LangId::BALLSTICK3D, LangId::SPACEFILL3D, LangId::WIRE2D, LangId::WIRE2D_HDEP}) {
    cls(diagram_class_for(id), "ChemicalDiagram",
        {{"conformsTo", Q::Some, lang_name(id), true}});
    a.individuals.push_back({lang_name(id), "DiagrammaticLanguage", {}});
  }
  sort_axioms(a);
  return a;
}

AxiomSet abox_axioms(const std::vector<Diagram>& diagrams, const std::vector<std::string>& names,
                     const Registry& registry, const ElementTable& table) {
  AxiomSet a;
  std::set<std::string> used_names;
  std::set<std::string> molecule_individuals;

  for (std::size_t i = 0; i < diagrams.size(); ++i) {
    const Diagram& d = diagrams[i];
    InterpretedLanguage lang = builtin_language(d.language, table);
    std::vector<Violation> violations = well_formed(d, lang);
    if (!violations.empty())
      throw DomainError("diagram is not well-formed: " + violations.front().message);

    std::string base = i < names.size() && !names[i].empty()
                           ? names[i]
                           : (d.name ? *d.name : "diagram_" + std::to_string(i + 1));
    std::string name = sanitize_name(base);
    while (used_names.count(name)) name += "_";
    used_names.insert(name);

    IndividualDecl ind;
    ind.name = name;
    ind.type = diagram_class_for(d.language);
    ind.facts.push_back({"conformsTo", lang_name(d.language)});
    for (const RegistryEntry& entry : registry.entries()) {
      if (is_about(d, lang, entry.graph, table))
        ind.facts.push_back({"isAbout", sanitize_name(entry.name) + "_molecule"});
    }
    std::sort(ind.facts.begin(), ind.facts.end(), [](const FactAssertion& l, const FactAssertion& r) {
      return std::tie(l.property, l.value) < std::tie(r.property, r.value);
    });
    for (const FactAssertion& fact : ind.facts)
      if (fact.property == "isAbout") molecule_individuals.insert(fact.value);
    a.individuals.push_back(std::move(ind));
  }

  for (const std::string& mol : molecule_individuals)
    a.individuals.push_back({mol, "MolecularEntity", {}});

  sort_axioms(a);
  return a;
}

std::string emit_axioms(const AxiomSet& axioms, bool legacy_warnings) {
  std::ostringstream out;
  out << "# diagramma ontology export, Manchester syntax subset\n";
  out << "Ontology: diagramma\n";
  for (const std::string& prop : axioms.object_properties)
    out << "\nObjectProperty: " << prop << "\n";
  for (const ClassDecl& c : axioms.classes) {
    out << "\nClass: " << c.name << "\n";
    if (c.superclass) out << "    SubClassOf: " << *c.superclass << "\n";
    for (const Restriction& r : c.restrictions) {
      out << "    SubClassOf: " << r.property << " "
          << (r.quantifier == Restriction::Quantifier::Some ? "some" : "only") << " "
          << (r.nominal_filler ? "{" + r.filler + "}" : r.filler) << "\n";
    }
  }
  for (const IndividualDecl& ind : axioms.individuals) {
    out << "\nIndividual: " << ind.name << "\n";
    out << "    Types: " << ind.type << "\n";
    bool has_is_about = std::any_of(ind.facts.begin(), ind.facts.end(),
                                    [](const FactAssertion& f) { return f.property == "isAbout"; });
    if (legacy_warnings && !has_is_about && ind.type != "DiagrammaticLanguage" &&
        ind.type != "MolecularEntity") {
      out << "    # warning: no isAbout fact; unsatisfiable under the existential reading"
             " 'isAbout some Entity'\n";
    }
    if (!ind.facts.empty()) {
      out << "    Facts: ";
      for (std::size_t i = 0; i < ind.facts.size(); ++i) {
        if (i) out << ", ";
        out << ind.facts[i].property << " " << ind.facts[i].value;
      }
      out << "\n";
    }
  }
  return out.str();
}

std::string emit_tbox(bool legacy) { return emit_axioms(tbox_axioms(legacy), legacy); }

std::string emit_abox(const std::vector<Diagram>& diagrams, const std::vector<std::string>& names,
                      const Registry& registry, bool legacy, const ElementTable& table) {
  return emit_axioms(abox_axioms(diagrams, names, registry, table), legacy);
}

AxiomSet parse_manchester_subset(const std::string& text) {
  AxiomSet a;
  ClassDecl* open_class = nullptr;
  IndividualDecl* open_individual = nullptr;

  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = trim(strip_comment(raw));
    if (line.empty()) continue;

    auto colon = line.find(':');
    if (colon == std::string::npos) throw ParseError("expected '<keyword>: ...'", lineno);
    std::string keyword = trim(line.substr(0, colon));
    std::string rest = trim(line.substr(colon + 1));

    if (keyword == "Ontology") {
      continue;
    } else if (keyword == "ObjectProperty") {
      if (rest.empty()) throw ParseError("ObjectProperty needs a name", lineno);
      a.object_properties.push_back(rest);
      open_class = nullptr;
      open_individual = nullptr;
    } else if (keyword == "Class") {
      if (rest.empty()) throw ParseError("Class needs a name", lineno);
      a.classes.push_back({rest, std::nullopt, {}});
      open_class = &a.classes.back();
      open_individual = nullptr;
    } else if (keyword == "SubClassOf") {
      if (!open_class) throw ParseError("SubClassOf outside a Class block", lineno);
      std::istringstream fields(rest);
      std::vector<std::string> words;
      std::string w;
      while (fields >> w) words.push_back(w);
      if (words.size() == 1) {
        if (open_class->superclass)
          throw ParseError("second named superclass for " + open_class->name, lineno);
        open_class->superclass = words[0];
      } else if (words.size() == 3 && (words[1] == "some" || words[1] == "only")) {
        Restriction r;
        r.property = words[0];
        r.quantifier = words[1] == "some" ? Restriction::Quantifier::Some
                                          : Restriction::Quantifier::Only;
        r.filler = words[2];
        if (r.filler.size() >= 2 && r.filler.front() == '{' && r.filler.back() == '}') {
          r.nominal_filler = true;
          r.filler = r.filler.substr(1, r.filler.size() - 2);
        }
        if (r.filler.empty()) throw ParseError("empty restriction filler", lineno);
        open_class->restrictions.push_back(std::move(r));
      } else {
        throw ParseError("expected '<super>' or '<property> some|only <filler>'", lineno);
      }
    } else if (keyword == "Individual") {
      if (rest.empty()) throw ParseError("Individual needs a name", lineno);
      a.individuals.push_back({rest, "", {}});
      open_individual = &a.individuals.back();
      open_class = nullptr;
    } else if (keyword == "Types") {
      if (!open_individual) throw ParseError("Types outside an Individual block", lineno);
      if (rest.empty()) throw ParseError("Types needs a class name", lineno);
      if (!open_individual->type.empty())
        throw ParseError("second Types line for " + open_individual->name, lineno);
      open_individual->type = rest;
    } else if (keyword == "Facts") {
      if (!open_individual) throw ParseError("Facts outside an Individual block", lineno);
      std::istringstream facts(rest);
      std::string item;
      while (std::getline(facts, item, ',')) {
        std::istringstream pair(trim(item));
        FactAssertion f;
        if (!(pair >> f.property >> f.value))
          throw ParseError("expected '<property> <individual>' in Facts", lineno);
        std::string extra;
        if (pair >> extra) throw ParseError("trailing content '" + extra + "' in Facts", lineno);
        open_individual->facts.push_back(std::move(f));
      }
    } else {
      throw ParseError("unknown keyword '" + keyword + "'", lineno);
    }
  }
  for (const IndividualDecl& ind : a.individuals)
    if (ind.type.empty())
      throw ParseError("individual " + ind.name + " has no Types line");
  return a;
}

std::vector<std::string> check_existential_facts(const AxiomSet& axioms) {
  std::vector<std::string> violations;
  std::map<std::string, const IndividualDecl*> by_name;
  for (const IndividualDecl& ind : axioms.individuals) by_name[ind.name] = &ind;

  // Is `cls` equal to or a subclass of `ancestor`?
  auto derives_from = [&axioms](std::string cls, const std::string& ancestor) {
    for (int hops = 0; hops < 64 && !cls.empty(); ++hops) {
      if (cls == ancestor) return true;
      const ClassDecl* decl = axioms.find_class(cls);
      if (!decl || !decl->superclass) return false;
      cls = *decl->superclass;
    }
    return false;
  };

  for (const IndividualDecl& ind : axioms.individuals) {
    // Collect some-restrictions along the individual's class chain.
    std::string cls = ind.type;
    for (int hops = 0; hops < 64 && !cls.empty(); ++hops) {
      const ClassDecl* decl = axioms.find_class(cls);
      if (!decl) break;
      for (const Restriction& r : decl->restrictions) {
        if (r.quantifier != Restriction::Quantifier::Some) continue;  // `only` imposes no existence
        bool satisfied = false;
        for (const FactAssertion& f : ind.facts) {
          if (f.property != r.property) continue;
          if (r.nominal_filler) {
            if (f.value == r.filler) satisfied = true;
          } else {
            auto target = by_name.find(f.value);
            if (target != by_name.end() && derives_from(target->second->type, r.filler))
              satisfied = true;
          }
          if (satisfied) break;
        }
        if (!satisfied)
          violations.push_back("individual " + ind.name + " violates '" + r.property + " some " +
                               (r.nominal_filler ? "{" + r.filler + "}" : r.filler) + "' from class " +
                               cls);
      }
      if (!decl->superclass) break;
      cls = *decl->superclass;
    }
  }
  return violations;
}

}  // namespace diagramma
