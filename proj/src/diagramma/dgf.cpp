#include "diagramma/dgf.hpp"

#include <sstream>

#include "diagramma/errors.hpp"
#include "diagramma/textutil.hpp"

namespace diagramma {

namespace {

// "x=1.5" -> 1.5, enforcing the expected key.
double keyed_number(const std::string& token, const char* key, int lineno) {
  std::string prefix = std::string(key) + "=";
  if (token.rfind(prefix, 0) != 0)
    throw ParseError("expected '" + prefix + "<num>', got '" + token + "'", lineno);
  return parse_number(token.substr(prefix.size()), key, lineno);
}

}  // namespace

Diagram parse_dgf(const std::string& text, const ElementTable& table) {
  Diagram d;
  std::optional<InterpretedLanguage> lang;
  bool saw_header = false;
  int lineno = 0;
  std::istringstream in(text);
  std::string raw;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = strip_comment(raw);
    std::istringstream fields(line);
    std::string keyword;
    if (!(fields >> keyword)) continue;

    if (!saw_header) {
      if (keyword != "dgf") throw ParseError("expected 'dgf 1' header", lineno);
      std::string version;
      if (!(fields >> version) || version != "1")
        throw ParseError("unsupported DGF version", lineno);
      require_no_trailing(fields, lineno);
      saw_header = true;
      continue;
    }

    if (keyword == "lang") {
      if (lang) throw ParseError("duplicate lang line", lineno);
      std::string name;
      if (!(fields >> name)) throw ParseError("lang line needs a language id", lineno);
      require_no_trailing(fields, lineno);
      auto id = lang_from_name(name);
      if (!id) throw ParseError("unknown language '" + name + "'", lineno);
      d.language = *id;
      lang = builtin_language(*id, table);
      continue;
    }
    if (!lang) throw ParseError("'" + keyword + "' before lang line", lineno);

    if (keyword == "name") {
      if (d.name) throw ParseError("duplicate name line", lineno);
      std::string value = trim(line.substr(line.find("name") + 4));
      if (value.empty()) throw ParseError("empty name", lineno);
      d.name = value;
    } else if (keyword == "token") {
      Token t;
      t.id = parse_int(fields, "token id", lineno);
      if (!(fields >> t.symbol)) throw ParseError("token line needs a symbol", lineno);
      std::vector<std::string> rest;
      std::string word;
      while (fields >> word) rest.push_back(word);
      if (!rest.empty()) {
        if (rest.size() != 2 && rest.size() != 3)
          throw ParseError("token coordinates must be 'x= y=' or 'x= y= z='", lineno);
        TokenPos pos;
        pos.point.x = keyed_number(rest[0], "x", lineno);
        pos.point.y = keyed_number(rest[1], "y", lineno);
        pos.dims = 2;
        if (rest.size() == 3) {
          pos.point.z = keyed_number(rest[2], "z", lineno);
          pos.dims = 3;
        }
        t.position = pos;
      }
      try {
        d.add_token(std::move(t), &*lang);
      } catch (const DomainError& e) {
        throw ParseError(e.what(), lineno);
      }
    } else if (keyword == "connect") {
      int a = parse_int(fields, "token id", lineno);
      int b = parse_int(fields, "token id", lineno);
      require_no_trailing(fields, lineno);
      try {
        d.add_connection(a, b);
      } catch (const DomainError& e) {
        throw ParseError(e.what(), lineno);
      }
    } else {
      throw ParseError("unknown keyword '" + keyword + "'", lineno);
    }
  }
  if (!saw_header) throw ParseError("missing 'dgf 1' header");
  if (!lang) throw ParseError("missing lang line");
  return d;
}

std::string write_dgf(const Diagram& d) {
  std::ostringstream out;
  out << "dgf 1\n";
  out << "lang " << lang_name(d.language) << "\n";
  if (d.name) out << "name " << *d.name << "\n";
  for (const auto& [id, token] : d.tokens()) {
    out << "token " << id << " " << token.symbol;
    if (token.position) {
      out << " x=" << format_number(token.position->point.x) << " y="
          << format_number(token.position->point.y);
      if (token.position->dims == 3) out << " z=" << format_number(token.position->point.z);
    }
    out << "\n";
  }
  for (const Connection& c : d.connections()) out << "connect " << c.a << " " << c.b << "\n";
  return out.str();
}

}  // namespace diagramma
