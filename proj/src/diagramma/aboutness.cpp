#include "diagramma/aboutness.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "diagramma/abstraction.hpp"
#include "diagramma/errors.hpp"
#include "diagramma/isomorphism.hpp"
#include "diagramma/wellformed.hpp"

namespace diagramma {

std::string PartId::to_string() const {
  if (kind == Kind::Atom) return "atom " + std::to_string(a);
  return "bond " + std::to_string(a) + "-" + std::to_string(b);
}

std::string ClauseReport::summary() const {
  std::ostringstream out;
  for (int i = 0; i < 4; ++i) {
    out << "clause " << (i + 1) << ": " << (clause[i].ok ? "ok" : clause[i].message);
    if (i < 3) out << "\n";
  }
  return out.str();
}

bool instantiates_language_type(const MolecularGraph& x, const PartId& part,
                                const InterpretedLanguage& lang) {
  if (part.kind == PartId::Kind::Atom) {
    if (!x.has_atom(part.a)) return false;
    return lang.it_types.count("atom:" + x.element_of(part.a)) > 0;
  }
  auto order = x.bond_order(part.a, part.b);
  if (!order) return false;
  if (!lang.dt_types.count("bond:" + std::to_string(*order))) return false;
  return lang.it_types.count("atom:" + x.element_of(part.a)) > 0 &&
         lang.it_types.count("atom:" + x.element_of(part.b)) > 0;
}

namespace {

bool part_exists(const MolecularGraph& x, const PartId& p) {
  if (p.kind == PartId::Kind::Atom) return x.has_atom(p.a);
  return x.bond_order(p.a, p.b).has_value();
}

// Does the part instantiate this specific mapped type ("atom:C", "bond:2")?
// Bond instantiation is relative to the language's type set: a bond whose
// bearer atoms fall outside the depicted types is not an instance of any of
// the language's bond types.
bool instantiates_type(const MolecularGraph& x, const PartId& part, const std::string& type,
                       const InterpretedLanguage& lang) {
  auto [kind, arg] = split_symbol(type);
  if (part.kind == PartId::Kind::Atom)
    return kind == "atom" && x.has_atom(part.a) && x.element_of(part.a) == arg;
  if (kind != "bond") return false;
  auto order = x.bond_order(part.a, part.b);
  if (!order || std::to_string(*order) != arg) return false;
  return lang.it_types.count("atom:" + x.element_of(part.a)) > 0 &&
         lang.it_types.count("atom:" + x.element_of(part.b)) > 0;
}

bool language_has_dt_symbols(const InterpretedLanguage& lang) {
  return std::any_of(lang.vocabulary.begin(), lang.vocabulary.end(),
                     [](const auto& kv) { return kv.second.kind == SymbolKind::DT; });
}

void check_clause1(const Diagram& d, const InterpretedLanguage& lang, const MolecularGraph& x,
                   const Interpretation& iota, ClauseStatus& status) {
  for (const auto& [tid, part] : iota.token_to_part) {
    const SymbolDef& def = lang.symbol(d.token(tid).symbol);
    if (!part_exists(x, part)) {
      status = {false,
                "token " + std::to_string(tid) + " maps to nonexistent " + part.to_string(),
                {tid},
                {part}};
      return;
    }
    if (!instantiates_type(x, part, def.mapped_type, lang)) {
      status = {false,
                "token " + std::to_string(tid) + " (" + def.name + ") maps to " + part.to_string() +
                    ", not an instance of " + def.mapped_type,
                {tid},
                {part}};
      return;
    }
  }
}

void check_clause2(const Diagram& d, const InterpretedLanguage& lang, const MolecularGraph& x,
                   const Interpretation& iota, const ElementTable& table, ClauseStatus& status) {
  if (language_has_dt_symbols(lang)) {
    status.message = "vacuous: IT tokens connect through DT tokens in this language";
    return;
  }
  std::set<Connection> diagram_side = derived_connections(d, lang, table);
  std::vector<TokenId> its;
  for (const auto& [tid, part] : iota.token_to_part)
    if (part.kind == PartId::Kind::Atom) its.push_back(tid);
  for (std::size_t i = 0; i < its.size(); ++i) {
    for (std::size_t j = i + 1; j < its.size(); ++j) {
      TokenId t1 = its[i], t2 = its[j];
      bool connected_d = diagram_side.count(Connection(t1, t2)) > 0;
      const PartId& p1 = iota.token_to_part.at(t1);
      const PartId& p2 = iota.token_to_part.at(t2);
      bool connected_x = x.bond_order(p1.a, p2.a).has_value();
      if (connected_d != connected_x) {
        std::ostringstream msg;
        msg << "tokens " << t1 << " and " << t2 << " are "
            << (connected_d ? "connected" : "not connected") << " but their images are "
            << (connected_x ? "bonded" : "not bonded");
        status = {false, msg.str(), {t1, t2}, {p1, p2}};
        return;
      }
    }
  }
}

void check_clause3(const Diagram& d, const InterpretedLanguage& lang, const MolecularGraph& x,
                   const Interpretation& iota, ClauseStatus& status) {
  for (const auto& [tid, part] : iota.token_to_part) {
    if (lang.symbol(d.token(tid).symbol).kind != SymbolKind::DT) continue;
    if (part.kind != PartId::Kind::Bond) {
      status = {false,
                "DT token " + std::to_string(tid) + " maps to " + part.to_string() +
                    ", which is not a dependent part",
                {tid},
                {part}};
      return;
    }
    for (TokenId n : d.neighbours(tid)) {
      auto it = iota.token_to_part.find(n);
      if (it == iota.token_to_part.end()) continue;  // totality is a precondition
      const PartId& bearer = it->second;
      bool inheres = bearer.kind == PartId::Kind::Atom &&
                     (bearer.a == part.a || bearer.a == part.b);
      if (!inheres) {
        status = {false,
                  part.to_string() + " (image of DT token " + std::to_string(tid) +
                      ") does not inhere in " + bearer.to_string() + " (image of token " +
                      std::to_string(n) + ")",
                  {tid, n},
                  {part, bearer}};
        return;
      }
    }
  }
}

void check_clause4(const Diagram& d, const InterpretedLanguage& lang, const MolecularGraph& x,
                   const Interpretation& iota, ClauseStatus& status) {
  (void)d;
  std::set<PartId> image;
  for (const auto& [tid, part] : iota.token_to_part) image.insert(part);

  for (const auto& [id, element] : x.atoms()) {
    PartId p = PartId::atom(id);
    if (instantiates_language_type(x, p, lang) && !image.count(p)) {
      status = {false,
                p.to_string() + " (" + element + ") instantiates a depicted type but no token maps to it",
                {},
                {p}};
      return;
    }
  }
  for (const Bond& bond : x.bonds()) {
    PartId p = PartId::bond(bond.a, bond.b);
    if (instantiates_language_type(x, p, lang) && !image.count(p)) {
      status = {false,
                p.to_string() + " (order " + std::to_string(bond.order) +
                    ") instantiates a depicted type but no token maps to it",
                {},
                {p}};
      return;
    }
  }
}

}  // namespace

ClauseReport verify_interpretation(const Diagram& d, const InterpretedLanguage& lang,
                                   const MolecularGraph& x, const Interpretation& iota,
                                   const ElementTable& table) {
  if (d.language != lang.id)
    throw DomainError(std::string("diagram declares ") + lang_name(d.language) +
                      " but was checked against " + lang_name(lang.id));
  if (iota.token_to_part.size() != d.token_count())
    throw DomainError("interpretation must be total on the diagram's tokens");
  std::set<PartId> image;
  for (const auto& [tid, part] : iota.token_to_part) {
    if (!d.has_token(tid)) throw DomainError("interpretation maps unknown token " + std::to_string(tid));
    if (!image.insert(part).second)
      throw DomainError("interpretation is not injective: " + part.to_string() + " hit twice");
  }

  ClauseReport report;
  check_clause1(d, lang, x, iota, report.clause[0]);
  check_clause2(d, lang, x, iota, table, report.clause[1]);
  check_clause3(d, lang, x, iota, report.clause[2]);
  check_clause4(d, lang, x, iota, report.clause[3]);
  return report;
}

std::optional<Interpretation> is_about(const Diagram& d, const InterpretedLanguage& lang,
                                       const MolecularGraph& x, const ElementTable& table) {
  std::vector<Violation> violations = well_formed(d, lang);
  if (!violations.empty())
    throw DomainError("diagram is not well-formed: " + violations.front().message);

  // Semantic reading of the diagram vs. the entity restricted to the
  // language's type set.
  MolecularGraph reading = abstract_diagram(d, lang, table);
  std::set<std::string> kept = lang.it_elements();
  bool spacefill = !language_has_dt_symbols(lang);
  std::set<int> orders = lang.dt_orders();
  MolecularGraph target = restrict_graph(x, kept, [&](const Bond& b) {
    return spacefill || orders.count(b.order) > 0;
  });
  if (spacefill) {
    // Connection is order-blind on both sides: collapse orders before matching.
    MolecularGraph flat;
    for (const auto& [id, el] : target.atoms()) flat.add_atom(id, el);
    for (const Bond& b : target.bonds()) flat.add_bond(b.a, b.b, 1);
    std::optional<AtomBijection> match = find_isomorphism(reading, flat);
    if (!match) return std::nullopt;
    Interpretation iota;
    for (const auto& [tid, aid] : *match) iota.token_to_part[tid] = PartId::atom(aid);
    return iota;
  }

  std::optional<AtomBijection> match = find_isomorphism(reading, target);
  if (!match) return std::nullopt;
  Interpretation iota;
  for (const auto& [tid, token] : d.tokens()) {
    if (lang.symbol(token.symbol).kind == SymbolKind::IT) {
      iota.token_to_part[tid] = PartId::atom(match->at(tid));
    } else {
      std::vector<TokenId> nb = d.neighbours(tid);
      iota.token_to_part[tid] = PartId::bond(match->at(nb[0]), match->at(nb[1]));
    }
  }
  return iota;
}

std::optional<Interpretation> brute_force_is_about(const Diagram& d,
                                                   const InterpretedLanguage& lang,
                                                   const MolecularGraph& x,
                                                   const ElementTable& table) {
  std::vector<PartId> parts;
  for (const auto& [id, el] : x.atoms()) parts.push_back(PartId::atom(id));
  for (const Bond& b : x.bonds()) parts.push_back(PartId::bond(b.a, b.b));
  if (d.token_count() > 12)
    throw GuardError("brute-force guard: " + std::to_string(d.token_count()) + " tokens > 12");
  if (parts.size() > 12)
    throw GuardError("brute-force guard: " + std::to_string(parts.size()) + " parts > 12");

  std::vector<TokenId> token_order;
  for (const auto& [tid, token] : d.tokens()) token_order.push_back(tid);

  Interpretation iota;
  std::vector<bool> used(parts.size(), false);

  // Enumerate clause-1-compatible injective maps; the full report decides.
  std::function<std::optional<Interpretation>(std::size_t)> assign =
      [&](std::size_t depth) -> std::optional<Interpretation> {
    if (depth == token_order.size()) {
      ClauseReport report = verify_interpretation(d, lang, x, iota, table);
      if (report.ok()) return iota;
      return std::nullopt;
    }
    TokenId tid = token_order[depth];
    const SymbolDef& def = lang.symbol(d.token(tid).symbol);
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (used[i]) continue;
      if (!instantiates_type(x, parts[i], def.mapped_type, lang)) continue;
      used[i] = true;
      iota.token_to_part[tid] = parts[i];
      if (auto found = assign(depth + 1)) return found;
      iota.token_to_part.erase(tid);
      used[i] = false;
    }
    return std::nullopt;
  };
  return assign(0);
}

}  // namespace diagramma
