#include "diagramma/diagram.hpp"

#include "diagramma/errors.hpp"

namespace diagramma {

void Diagram::add_token(Token token, const InterpretedLanguage* vocabulary_check) {
  if (token.id <= 0) throw DomainError("token id must be positive, got " + std::to_string(token.id));
  if (vocabulary_check && !vocabulary_check->find_symbol(token.symbol))
    throw DomainError("symbol '" + token.symbol + "' not in vocabulary of " +
                      lang_name(vocabulary_check->id));
  auto [it, inserted] = tokens_.try_emplace(token.id, std::move(token));
  if (!inserted) throw DomainError("duplicate token id " + std::to_string(it->first));
}

void Diagram::add_connection(TokenId a, TokenId b) {
  if (a == b) throw DomainError("connection endpoints must differ, got token " + std::to_string(a));
  if (!has_token(a)) throw DomainError("connection references missing token " + std::to_string(a));
  if (!has_token(b)) throw DomainError("connection references missing token " + std::to_string(b));
  if (!connections_.insert(Connection(a, b)).second)
    throw DomainError("duplicate connection between tokens " + std::to_string(a) + " and " +
                      std::to_string(b));
}

void Diagram::remove_token(TokenId id) {
  tokens_.erase(id);
  for (auto it = connections_.begin(); it != connections_.end();) {
    if (it->a == id || it->b == id) it = connections_.erase(it);
    else ++it;
  }
}

const Token& Diagram::token(TokenId id) const {
  auto it = tokens_.find(id);
  if (it == tokens_.end()) throw DomainError("unknown token id " + std::to_string(id));
  return it->second;
}

std::vector<TokenId> Diagram::neighbours(TokenId id) const {
  std::vector<TokenId> out;
  for (const Connection& c : connections_) {
    if (c.a == id) out.push_back(c.b);
    else if (c.b == id) out.push_back(c.a);
  }
  return out;
}

Diagram permute_diagram(const Diagram& d, const std::map<TokenId, TokenId>& perm) {
  auto mapped = [&perm](TokenId id) {
    auto it = perm.find(id);
    return it == perm.end() ? id : it->second;
  };
  Diagram out;
  out.language = d.language;
  out.name = d.name;
  for (const auto& [id, token] : d.tokens()) {
    Token t = token;
    t.id = mapped(id);
    out.add_token(std::move(t));
  }
  for (const Connection& c : d.connections()) out.add_connection(mapped(c.a), mapped(c.b));
  return out;
}

}  // namespace diagramma
