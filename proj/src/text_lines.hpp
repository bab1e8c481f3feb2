#pragma once

// Tokenizer shared by the line-oriented file formats.

#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "tiematch/error.hpp"

namespace tiematch::detail {

struct Token {
  std::string_view text;
  int column = 0;  // 1-based
};

struct Line {
  int number = 0;  // 1-based
  std::vector<Token> tokens;
};

// Splits into lines, drops comments and blank lines. Parentheses and ':'
// are emitted as separate tokens.
inline std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);

    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      const char c = raw[i];
      if (c == ' ' || c == '\t' || c == '\r') {
        ++i;
      } else if (c == '(' || c == ')' || c == ':') {
        line.tokens.push_back({raw.substr(i, 1), static_cast<int>(i) + 1});
        ++i;
      } else {
        std::size_t j = i;
        while (j < raw.size() && raw[j] != ' ' && raw[j] != '\t' && raw[j] != '\r' &&
               raw[j] != '(' && raw[j] != ')' && raw[j] != ':')
          ++j;
        line.tokens.push_back({raw.substr(i, j - i), static_cast<int>(i) + 1});
        i = j;
      }
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return lines;
}

inline int parse_int(const Line& line, const Token& tok) {
  int value = 0;
  const char* first = tok.text.data();
  const char* last = first + tok.text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || value < 0)
    throw SyntaxError(line.number, tok.column,
                      "expected a nonnegative integer, got '" + std::string(tok.text) + "'");
  return value;
}

inline void expect(const Line& line, std::size_t index, std::string_view word) {
  if (index >= line.tokens.size()) {
    const int col = line.tokens.empty()
                        ? 1
                        : line.tokens.back().column + static_cast<int>(line.tokens.back().text.size());
    throw SyntaxError(line.number, col, "expected '" + std::string(word) + "'");
  }
  if (line.tokens[index].text != word)
    throw SyntaxError(line.number, line.tokens[index].column,
                      "expected '" + std::string(word) + "', got '" +
                          std::string(line.tokens[index].text) + "'");
}

inline const Token& token_at(const Line& line, std::size_t index, std::string_view what) {
  if (index >= line.tokens.size()) {
    const int col = line.tokens.back().column + static_cast<int>(line.tokens.back().text.size());
    throw SyntaxError(line.number, col, "missing " + std::string(what));
  }
  return line.tokens[index];
}

}  // namespace tiematch::detail
