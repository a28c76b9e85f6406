#include "diagramma/wellformed.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "diagramma/errors.hpp"

namespace diagramma {

namespace {

void check_r1(const Diagram& d, const InterpretedLanguage& lang, std::vector<Violation>& out) {
  for (const auto& [id, token] : d.tokens()) {
    if (lang.symbol(token.symbol).kind != SymbolKind::DT) continue;
    std::vector<TokenId> nb = d.neighbours(id);
    bool all_it = std::all_of(nb.begin(), nb.end(), [&](TokenId n) {
      return lang.symbol(d.token(n).symbol).kind == SymbolKind::IT;
    });
    if (nb.size() != 2 || !all_it) {
      std::ostringstream msg;
      msg << "DT token " << id << " (" << token.symbol << ") must connect exactly two IT tokens, has "
          << nb.size() << (all_it ? "" : " (some not IT)");
      out.push_back({"r1", msg.str(), {id}});
    }
  }
}

void check_r2(const Diagram& d, const InterpretedLanguage& lang, std::vector<Violation>& out) {
  for (const Connection& c : d.connections()) {
    if (lang.symbol(d.token(c.a).symbol).kind == SymbolKind::IT &&
        lang.symbol(d.token(c.b).symbol).kind == SymbolKind::IT) {
      out.push_back({"r2",
                     "IT tokens " + std::to_string(c.a) + " and " + std::to_string(c.b) +
                         " connect directly",
                     {c.a, c.b}});
    }
  }
}

void check_r3(const Diagram& d, const InterpretedLanguage& lang, std::vector<Violation>& out) {
  std::map<Connection, std::vector<TokenId>> per_pair;
  for (const auto& [id, token] : d.tokens()) {
    if (lang.symbol(token.symbol).kind != SymbolKind::DT) continue;
    std::vector<TokenId> nb = d.neighbours(id);
    if (nb.size() != 2) continue;  // r1's problem
    per_pair[Connection(nb[0], nb[1])].push_back(id);
  }
  for (const auto& [pair, dts] : per_pair) {
    if (dts.size() > 1) {
      std::ostringstream msg;
      msg << dts.size() << " DT tokens between IT tokens " << pair.a << " and " << pair.b;
      out.push_back({"r3", msg.str(), dts});
    }
  }
}

void check_r4(const Diagram& d, const InterpretedLanguage& lang, std::vector<Violation>& out) {
  for (const auto& [id, token] : d.tokens()) {
    int arity = lang.symbol(token.symbol).geometry_arity;
    if (arity == 0) {
      if (token.position)
        out.push_back({"r4", "token " + std::to_string(id) + " carries coordinates but " +
                                 token.symbol + " takes none",
                       {id}});
      continue;
    }
    if (!token.position) {
      out.push_back({"r4", "token " + std::to_string(id) + " (" + token.symbol + ") is missing its " +
                               std::to_string(arity) + "D position",
                     {id}});
    } else if (token.position->dims != arity) {
      out.push_back({"r4", "token " + std::to_string(id) + " (" + token.symbol + ") has a " +
                               std::to_string(token.position->dims) + "D position, needs " +
                               std::to_string(arity) + "D",
                     {id}});
    }
  }
}

void check_r5(const Diagram& d, const InterpretedLanguage& lang, std::vector<Violation>& out) {
  std::vector<std::pair<TokenPos, TokenId>> seen;
  for (const auto& [id, token] : d.tokens()) {
    if (lang.symbol(token.symbol).kind != SymbolKind::IT || !token.position) continue;
    for (const auto& [pos, other] : seen) {
      if (pos == *token.position) {
        out.push_back({"r5",
                       "IT tokens " + std::to_string(other) + " and " + std::to_string(id) +
                           " share a position",
                       {other, id}});
      }
    }
    seen.emplace_back(*token.position, id);
  }
}

void check_r6(const Diagram& d, std::vector<Violation>& out) {
  for (const Connection& c : d.connections())
    out.push_back({"r6",
                   "explicit connection " + std::to_string(c.a) + "-" + std::to_string(c.b) +
                       " in a language whose connections are geometric",
                   {c.a, c.b}});
}

void check_r7(const Diagram& d, std::vector<Violation>& out) {
  for (const auto& [id, token] : d.tokens()) {
    if (split_symbol(token.symbol).second == "H")
      out.push_back({"r7", "hydrogen symbol " + token.symbol + " on token " + std::to_string(id),
                     {id}});
  }
}

}  // namespace

std::vector<Violation> well_formed(const Diagram& d, const InterpretedLanguage& lang) {
  if (d.language != lang.id)
    throw DomainError(std::string("diagram declares ") + lang_name(d.language) +
                      " but was checked against " + lang_name(lang.id));
  std::vector<Violation> out;
  for (const std::string& rule : lang.grammar) {
    if (rule == "r1") check_r1(d, lang, out);
    else if (rule == "r2") check_r2(d, lang, out);
    else if (rule == "r3") check_r3(d, lang, out);
    else if (rule == "r4") check_r4(d, lang, out);
    else if (rule == "r5") check_r5(d, lang, out);
    else if (rule == "r6") check_r6(d, out);
    else if (rule == "r7") check_r7(d, out);
    else throw DomainError("unknown grammar rule '" + rule + "'");
  }
  return out;
}

std::set<Connection> derived_connections(const Diagram& d, const InterpretedLanguage& lang,
                                         const ElementTable& table) {
  if (d.language != lang.id)
    throw DomainError(std::string("diagram declares ") + lang_name(d.language) +
                      " but was checked against " + lang_name(lang.id));
  if (lang.id != LangId::SPACEFILL3D) return d.connections();

  std::vector<std::pair<TokenId, const Token*>> balls;
  for (const auto& [id, token] : d.tokens()) {
    if (!token.position)
      throw DomainError("token " + std::to_string(id) + " is missing its position");
    balls.emplace_back(id, &token);
  }
  std::set<Connection> out;
  for (std::size_t i = 0; i < balls.size(); ++i) {
    const auto& [ia, ta] = balls[i];
    double ra = table.at(split_symbol(ta->symbol).second).covalent_radius_pm;
    for (std::size_t j = i + 1; j < balls.size(); ++j) {
      const auto& [ib, tb] = balls[j];
      double rb = table.at(split_symbol(tb->symbol).second).covalent_radius_pm;
      if (distance(ta->position->point, tb->position->point) <
          lang.params.overlap_factor * (ra + rb))
        out.insert(Connection(ia, ib));
    }
  }
  return out;
}

}  // namespace diagramma
