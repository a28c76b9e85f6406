#include "diagramma/coarsening.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "diagramma/aboutness.hpp"
#include "diagramma/errors.hpp"
#include "diagramma/wellformed.hpp"

namespace diagramma {

const std::vector<CoarseningFn>& registered_coarsenings() {
  static const std::vector<CoarseningFn> catalog = [] {
    std::vector<CoarseningFn> fns;
    {
      CoarseningFn m1{"m1", LangId::BALLSTICK3D, LangId::WIRE2D, {}};
      m1.rewrite.it_prefix["sphere"] = "vertex";
      m1.rewrite.dt_prefix["stick"] = "line";
      m1.rewrite.project_to_2d = true;
      fns.push_back(std::move(m1));
    }
    {
      CoarseningFn m2{"m2", LangId::BALLSTICK3D, LangId::SPACEFILL3D, {}};
      m2.rewrite.it_prefix["sphere"] = "ball";
      m2.rewrite.drop_dt_tokens = true;
      fns.push_back(std::move(m2));
    }
    {
      CoarseningFn m3{"m3", LangId::WIRE2D, LangId::WIRE2D_HDEP, {}};
      m3.rewrite.it_prefix["vertex"] = "vertex";
      m3.rewrite.dt_prefix["line"] = "line";
      m3.rewrite.drop_it_elements.insert("H");
      fns.push_back(std::move(m3));
    }
    return fns;
  }();
  return catalog;
}

namespace {

// Depth-first search over catalog edges; returns coarsening ids along the
// first path found (the catalog is a DAG, paths here are unique anyway).
std::optional<std::vector<const CoarseningFn*>> find_path(LangId from, LangId to) {
  if (from == to) return std::nullopt;  // strict: no empty path
  std::vector<const CoarseningFn*> path;
  std::function<bool(LangId)> dfs = [&](LangId cur) {
    if (cur == to) return true;
    for (const CoarseningFn& m : registered_coarsenings()) {
      if (m.source_lang != cur) continue;
      path.push_back(&m);
      if (dfs(m.target_lang)) return true;
      path.pop_back();
    }
    return false;
  };
  if (dfs(from)) return path;
  return std::nullopt;
}

}  // namespace

bool language_strictly_above(LangId a, LangId b) { return find_path(a, b).has_value(); }

Diagram apply_coarsening(const CoarseningFn& m, const Diagram& d, const ElementTable& table) {
  if (d.language != m.source_lang)
    throw DomainError("coarsening " + m.id + " expects " + lang_name(m.source_lang) + ", got " +
                      lang_name(d.language));
  InterpretedLanguage source = builtin_language(m.source_lang, table);
  std::vector<Violation> violations = well_formed(d, source);
  if (!violations.empty())
    throw DomainError("coarsening input is not well-formed: " + violations.front().message);

  const RewriteRules& rules = m.rewrite;
  std::set<TokenId> dropped;
  for (const auto& [id, token] : d.tokens()) {
    const SymbolDef& def = source.symbol(token.symbol);
    auto [prefix, arg] = split_symbol(token.symbol);
    if (def.kind == SymbolKind::IT && rules.drop_it_elements.count(arg)) dropped.insert(id);
    if (def.kind == SymbolKind::DT && rules.drop_dt_tokens) dropped.insert(id);
  }
  // DT tokens riding on a dropped IT token go too.
  for (const auto& [id, token] : d.tokens()) {
    if (source.symbol(token.symbol).kind != SymbolKind::DT) continue;
    for (TokenId n : d.neighbours(id))
      if (dropped.count(n)) dropped.insert(id);
  }

  Diagram out;
  out.language = m.target_lang;
  out.name = d.name;
  for (const auto& [id, token] : d.tokens()) {
    if (dropped.count(id)) continue;
    const SymbolDef& def = source.symbol(token.symbol);
    auto [prefix, arg] = split_symbol(token.symbol);
    const auto& prefix_map = def.kind == SymbolKind::IT ? rules.it_prefix : rules.dt_prefix;
    auto rename = prefix_map.find(prefix);
    if (rename == prefix_map.end())
      throw DomainError("coarsening " + m.id + " has no rewrite for symbol '" + token.symbol + "'");
    Token t = token;
    t.symbol = rename->second + (arg.empty() ? "" : ":" + arg);
    if (rules.project_to_2d && t.position) {
      t.position->point.z = 0.0;
      t.position->dims = 2;
    }
    out.add_token(std::move(t));
  }
  if (!rules.drop_dt_tokens) {
    for (const Connection& c : d.connections())
      if (!dropped.count(c.a) && !dropped.count(c.b)) out.add_connection(c.a, c.b);
  }
  return out;
}

std::optional<CoarsenedDiagram> coarsen_to(const Diagram& d, LangId target,
                                           const ElementTable& table) {
  auto path = find_path(d.language, target);
  if (!path) return std::nullopt;
  CoarsenedDiagram result{d, {}};
  for (const CoarseningFn* m : *path) {
    result.diagram = apply_coarsening(*m, result.diagram, table);
    result.via.push_back(m->id);
  }
  return result;
}

namespace {

bool positions_close(const std::optional<TokenPos>& a, const std::optional<TokenPos>& b) {
  if (a.has_value() != b.has_value()) return false;
  if (!a) return true;
  if (a->dims != b->dims) return false;
  double scale = std::max({1.0, std::abs(a->point.x), std::abs(a->point.y), std::abs(a->point.z),
                           std::abs(b->point.x), std::abs(b->point.y), std::abs(b->point.z)});
  return distance(a->point, b->point) <= 1e-6 * scale;
}

}  // namespace

bool diagram_structurally_equal(const Diagram& a, const Diagram& b, bool compare_positions) {
  if (a.language != b.language) return false;
  if (a.token_count() != b.token_count()) return false;
  if (a.connections().size() != b.connections().size()) return false;

  std::vector<TokenId> ta, tb;
  for (const auto& [id, t] : a.tokens()) ta.push_back(id);
  for (const auto& [id, t] : b.tokens()) tb.push_back(id);

  std::map<TokenId, TokenId> mapping;
  std::set<TokenId> used;
  std::function<bool(std::size_t)> extend = [&](std::size_t depth) {
    if (depth == ta.size()) return true;
    TokenId va = ta[depth];
    for (TokenId vb : tb) {
      if (used.count(vb)) continue;
      if (a.token(va).symbol != b.token(vb).symbol) continue;
      if (compare_positions && !positions_close(a.token(va).position, b.token(vb).position))
        continue;
      bool consistent = true;
      for (const auto& [pa, pb] : mapping) {
        if (a.connected(va, pa) != b.connected(vb, pb)) { consistent = false; break; }
      }
      if (!consistent) continue;
      mapping[va] = vb;
      used.insert(vb);
      if (extend(depth + 1)) return true;
      mapping.erase(va);
      used.erase(vb);
    }
    return false;
  };
  return extend(0);
}

CoarserThanResult coarser_than(const Diagram& d2, const Diagram& d1, const ElementTable& table) {
  for (const Diagram* d : {&d1, &d2}) {
    InterpretedLanguage lang = builtin_language(d->language, table);
    std::vector<Violation> violations = well_formed(*d, lang);
    if (!violations.empty())
      throw DomainError("diagram is not well-formed: " + violations.front().message);
  }

  if (d1.language == d2.language)
    return {false, std::string("both diagrams conform to ") + lang_name(d1.language) +
                       "; the order is strict"};
  if (!language_strictly_above(d1.language, d2.language)) {
    std::ostringstream why;
    why << "no registered coarsening chain from " << lang_name(d1.language) << " to "
        << lang_name(d2.language);
    if (language_strictly_above(d2.language, d1.language))
      why << " (the catalog runs the other way)";
    return {false, why.str()};
  }

  auto coarsened = coarsen_to(d1, d2.language, table);
  bool positions_matter = d2.language == LangId::BALLSTICK3D || d2.language == LangId::SPACEFILL3D;
  if (!diagram_structurally_equal(coarsened->diagram, d2, positions_matter)) {
    std::ostringstream why;
    why << "coarsened image under ";
    for (std::size_t i = 0; i < coarsened->via.size(); ++i) {
      if (i) why << " then ";
      why << coarsened->via[i];
    }
    why << " is not structurally equal to the candidate";
    return {false, why.str()};
  }
  std::ostringstream via;
  via << "via ";
  for (std::size_t i = 0; i < coarsened->via.size(); ++i) {
    if (i) via << " then ";
    via << coarsened->via[i];
  }
  return {true, via.str()};
}

Diagram lift_through_coarsening(const CoarseningFn& m, const Diagram& d2, const MolecularGraph& x,
                                const ElementTable& table) {
  InterpretedLanguage target = builtin_language(m.target_lang, table);
  auto witness = is_about(d2, target, x, table);
  if (!witness) throw DomainError("cannot lift: the diagram is not about the given entity");

  if (m.id == "m1") {
    // Wireframe back to ball-and-stick: re-embed at z = 0.
    Diagram up;
    up.language = m.source_lang;
    up.name = d2.name;
    for (const auto& [id, token] : d2.tokens()) {
      Token t = token;
      auto [prefix, arg] = split_symbol(token.symbol);
      t.symbol = (prefix == "vertex" ? "sphere" : "stick") + std::string(":") + arg;
      if (prefix == "vertex") {
        TokenPos pos = token.position.value();
        pos.dims = 3;
        pos.point.z = 0.0;
        t.position = pos;
      }
      up.add_token(std::move(t));
    }
    for (const Connection& c : d2.connections()) up.add_connection(c.a, c.b);
    return up;
  }

  if (m.id == "m2") {
    // Spacefill back to ball-and-stick: positions kept, sticks re-added with
    // orders read off the entity through the witness.
    Diagram up;
    up.language = m.source_lang;
    up.name = d2.name;
    TokenId next = 1;
    for (const auto& [id, token] : d2.tokens()) {
      Token t = token;
      t.symbol = "sphere:" + split_symbol(token.symbol).second;
      up.add_token(std::move(t));
      next = std::max(next, id + 1);
    }
    std::map<AtomId, TokenId> part_to_token;
    for (const auto& [tid, part] : witness->token_to_part) part_to_token[part.a] = tid;
    for (const Bond& bond : x.bonds()) {
      auto ta = part_to_token.find(bond.a);
      auto tb = part_to_token.find(bond.b);
      if (ta == part_to_token.end() || tb == part_to_token.end()) continue;
      Token t;
      TokenId id = next++;
      t.id = id;
      t.symbol = "stick:" + std::to_string(bond.order);
      up.add_token(std::move(t));
      up.add_connection(id, ta->second);
      up.add_connection(id, tb->second);
    }
    return up;
  }

  if (m.id == "m3") {
    // Hydrogen-suppressed wireframe back to the full wireframe: hydrogens and
    // their lines re-added from the entity through the witness.
    Diagram up;
    up.language = m.source_lang;
    up.name = d2.name;
    TokenId next = 1;
    std::vector<TokenPos> taken;
    auto is_taken = [&taken](const TokenPos& p) {
      return std::any_of(taken.begin(), taken.end(), [&p](const TokenPos& q) { return p == q; });
    };
    for (const auto& [id, token] : d2.tokens()) {
      up.add_token(token);
      next = std::max(next, id + 1);
      if (token.position) taken.push_back(*token.position);
    }
    for (const Connection& c : d2.connections()) up.add_connection(c.a, c.b);

    std::map<AtomId, TokenId> atom_to_token;
    for (const auto& [tid, part] : witness->token_to_part)
      if (part.kind == PartId::Kind::Atom) atom_to_token[part.a] = tid;

    // One fresh vertex per hydrogen atom of x, anchored near a bonded
    // partner when one is already drawn.
    int placed = 0;
    for (const auto& [hid, element] : x.atoms()) {
      if (element != "H") continue;
      TokenPos pos;
      pos.dims = 2;
      for (const Bond& bond : x.incident_bonds(hid)) {
        AtomId other = bond.a == hid ? bond.b : bond.a;
        auto anchor = atom_to_token.find(other);
        if (anchor != atom_to_token.end() && up.token(anchor->second).position) {
          pos = *up.token(anchor->second).position;
          break;
        }
      }
      do {
        pos.point.x += 23.0;
        pos.point.y += 11.0 + 3.0 * placed;
      } while (is_taken(pos));
      taken.push_back(pos);
      ++placed;

      Token hydrogen;
      TokenId h_id = next++;
      hydrogen.id = h_id;
      hydrogen.symbol = "vertex:H";
      hydrogen.position = pos;
      up.add_token(std::move(hydrogen));
      atom_to_token[hid] = h_id;
    }
    // Lines for every bond of x touching a hydrogen.
    for (const Bond& bond : x.bonds()) {
      if (x.element_of(bond.a) != "H" && x.element_of(bond.b) != "H") continue;
      Token line;
      TokenId l_id = next++;
      line.id = l_id;
      line.symbol = "line:" + std::to_string(bond.order);
      up.add_token(std::move(line));
      up.add_connection(l_id, atom_to_token.at(bond.a));
      up.add_connection(l_id, atom_to_token.at(bond.b));
    }
    return up;
  }

  throw DomainError("no lift rule for coarsening " + m.id);
}

CoarseningCheckReport check_coarsening_properties(
    const CoarseningFn& m, const std::vector<std::pair<Diagram, MolecularGraph>>& sample,
    const ElementTable& table) {
  InterpretedLanguage source = builtin_language(m.source_lang, table);
  InterpretedLanguage target = builtin_language(m.target_lang, table);

  CoarseningCheckReport report;
  for (const auto& [d, x] : sample) {
    if (d.language != m.source_lang)
      throw DomainError("sample diagram conforms to " + std::string(lang_name(d.language)) +
                        ", expected " + lang_name(m.source_lang));
    if (!is_about(d, source, x, table)) continue;  // clauses quantify over "about" pairs

    Diagram image = apply_coarsening(m, d, table);

    ++report.clause2_checked;
    if (is_about(image, target, x, table)) {
      ++report.clause2_preserved;
    } else {
      report.failures.push_back("clause 2: aboutness lost through " + m.id + " on " +
                                (x.name ? *x.name : "unnamed molecule"));
    }

    ++report.clause3_checked;
    try {
      Diagram lifted = lift_through_coarsening(m, image, x, table);
      bool positions_matter =
          m.target_lang == LangId::BALLSTICK3D || m.target_lang == LangId::SPACEFILL3D;
      bool maps_back =
          diagram_structurally_equal(apply_coarsening(m, lifted, table), image, positions_matter);
      bool about = is_about(lifted, source, x, table).has_value();
      if (maps_back && about) {
        ++report.clause3_lifted;
      } else {
        report.failures.push_back("clause 3: lift through " + m.id + (maps_back ? "" : " does not map back") +
                                  (about ? "" : " and is not about the entity"));
      }
    } catch (const std::exception& e) {
      report.failures.push_back(std::string("clause 3: lift failed: ") + e.what());
    }
  }
  return report;
}

}  // namespace diagramma
