#pragma once

// Line-oriented tokenizing shared by the text formats.

#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "eulerpiv/common.hpp"

namespace eulerpiv::detail {

struct TokenLine {
  int line_no = 0;
  std::vector<std::string> tokens;
};

/// Non-empty lines with '#' comments stripped.
inline std::vector<TokenLine> read_token_lines(std::istream& in) {
  std::vector<TokenLine> lines;
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ss(raw);
    TokenLine tl{line_no, {}};
    for (std::string tok; ss >> tok;) tl.tokens.push_back(tok);
    if (!tl.tokens.empty()) lines.push_back(std::move(tl));
  }
  return lines;
}

[[noreturn]] inline void parse_fail(int line_no, const std::string& what) {
  fail(ErrorCode::Parse, "line " + std::to_string(line_no) + ": " + what);
}

inline long long parse_integer(const std::string& tok, int line_no) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(tok, &used);
  } catch (const std::exception&) {
    parse_fail(line_no, "expected integer, got '" + tok + "'");
  }
  if (used != tok.size()) parse_fail(line_no, "expected integer, got '" + tok + "'");
  return v;
}

inline void expect_header(const TokenLine& tl, const std::string& keyword, std::size_t arg_count) {
  if (tl.tokens.empty() || tl.tokens[0] != keyword) {
    parse_fail(tl.line_no, "expected header '" + keyword + "'");
  }
  if (tl.tokens.size() != arg_count + 1) {
    parse_fail(tl.line_no, "header '" + keyword + "' takes " + std::to_string(arg_count) + " arguments");
  }
}

}  // namespace eulerpiv::detail
