#pragma once

#include <charconv>
#include <sstream>
#include <string>

#include "diagramma/errors.hpp"

namespace diagramma {

inline std::string strip_comment(const std::string& line) {
  auto hash = line.find('#');
  return hash == std::string::npos ? line : line.substr(0, hash);
}

inline std::string trim(const std::string& s) {
  auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

inline int parse_int(std::istringstream& fields, const char* what, int lineno) {
  std::string token;
  if (!(fields >> token)) throw ParseError(std::string("missing ") + what, lineno);
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size())
    throw ParseError("bad " + std::string(what) + " '" + token + "'", lineno);
  return value;
}

inline void require_no_trailing(std::istringstream& fields, int lineno) {
  std::string rest;
  if (fields >> rest) throw ParseError("trailing content '" + rest + "'", lineno);
}

// Shortest representation that round-trips the double exactly.
inline std::string format_number(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  (void)ec;
  return std::string(buf, ptr);
}

inline double parse_number(const std::string& token, const char* what, int lineno) {
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size())
    throw ParseError("bad " + std::string(what) + " '" + token + "'", lineno);
  return value;
}

}  // namespace diagramma
