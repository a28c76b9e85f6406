#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "diagramma/geom.hpp"
#include "diagramma/language.hpp"

namespace diagramma {

using TokenId = int;

struct TokenPos {
  Vec3 point;
  int dims = 0;  // 2 or 3
  bool operator==(const TokenPos&) const = default;
};

struct Token {
  TokenId id = 0;
  std::string symbol;
  std::optional<TokenPos> position;
  // Presentation-only annotation; not part of the DGF wire format.
  std::optional<std::string> label;
};

struct Connection {
  TokenId a = 0;
  TokenId b = 0;
  Connection() = default;
  Connection(TokenId x, TokenId y) : a(x < y ? x : y), b(x < y ? y : x) {}
  auto operator<=>(const Connection&) const = default;
};

// A token graph with geometry, conforming to one of the built-in languages.
// Construction enforces only the referential invariants (ids unique,
// connection endpoints exist and differ, symbols drawn from the declared
// language); grammar conformance is well_formed's verdict, not a constructor
// guarantee — ill-formed expressions are still expressions.
class Diagram {
 public:
  LangId language = LangId::WIRE2D;
  std::optional<std::string> name;

  // Throws DomainError on violations. Symbol membership is checked against
  // vocabulary when one is supplied (parse_dgf always supplies one).
  void add_token(Token token, const InterpretedLanguage* vocabulary_check = nullptr);
  void add_connection(TokenId a, TokenId b);
  void remove_token(TokenId id);  // drops incident connections too

  bool has_token(TokenId id) const { return tokens_.count(id) > 0; }
  const Token& token(TokenId id) const;
  const std::map<TokenId, Token>& tokens() const { return tokens_; }
  const std::set<Connection>& connections() const { return connections_; }
  bool connected(TokenId a, TokenId b) const { return connections_.count(Connection(a, b)) > 0; }
  std::vector<TokenId> neighbours(TokenId id) const;

  std::size_t token_count() const { return tokens_.size(); }

 private:
  std::map<TokenId, Token> tokens_;
  std::set<Connection> connections_;
};

// Re-identify tokens through an id bijection (ids not in the map are kept).
Diagram permute_diagram(const Diagram& d, const std::map<TokenId, TokenId>& perm);

}  // namespace diagramma
