#include <algorithm>
#include <array>
#include <cctype>

#include "smellscope/common/error.hpp"
#include "smellscope/metrics/java_syntax.hpp"

namespace smellscope::java {

namespace {

constexpr std::array<std::string_view, 53> kKeywords = {
    "abstract", "assert",     "boolean",   "break",     "byte",      "case",
    "catch",    "char",       "class",     "const",     "continue",  "default",
    "do",       "double",     "else",      "enum",      "extends",   "final",
    "finally",  "float",      "for",       "goto",      "if",        "implements",
    "import",   "instanceof", "int",       "interface", "long",      "native",
    "new",      "package",    "private",   "protected", "public",    "return",
    "short",    "static",     "strictfp",  "super",     "switch",    "synchronized",
    "this",     "throw",      "throws",    "transient", "try",       "void",
    "volatile", "while",      "true",      "false",     "null",
};

// Longest match first. `>>` and `>>>` are deliberately absent so that nested type
// argument lists close one token at a time.
constexpr std::array<std::string_view, 36> kOperators = {
    "<<=", "...", "->", "::", "++", "--", "&&", "||", "==", "!=", "<=", ">=",
    "+=",  "-=",  "*=", "/=", "%=", "&=", "|=", "^=", "<<", "(",  ")",  "{",
    "}",   "[",   "]",  ";",  ",",  ".",  "@",  "=",  ">",  "<",  "!",  "~",
};

constexpr std::string_view kSingleOperators = "?:+-*/&|^%";

bool ident_start(unsigned char c) { return std::isalpha(c) || c == '_' || c == '$' || c >= 0x80; }
bool ident_part(unsigned char c) { return std::isalnum(c) || c == '_' || c == '$' || c >= 0x80; }

}  // namespace

bool is_keyword(std::string_view word) noexcept {
  return std::find(kKeywords.begin(), kKeywords.end(), word) != kKeywords.end();
}

LexResult lex(std::string_view src, const std::string& file) {
  LexResult out;
  int line = 1;
  std::size_t i = 0;
  const std::size_t n = src.size();
  auto fail = [&](const std::string& msg) { throw ParseError(msg, file, static_cast<std::size_t>(line)); };

  while (i < n) {
    const char c = src[i];
    if (c == '\n') {
      ++line;
      ++i;
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r' || c == '\f') {
      ++i;
      continue;
    }
    if (c == '/' && i + 1 < n && src[i + 1] == '/') {
      const auto end = src.find('\n', i);
      const auto stop = end == std::string_view::npos ? n : end;
      out.comments.push_back({std::string(src.substr(i + 2, stop - i - 2)), line, line});
      i = stop;
      continue;
    }
    if (c == '/' && i + 1 < n && src[i + 1] == '*') {
      const auto end = src.find("*/", i + 2);
      if (end == std::string_view::npos) fail("unterminated block comment");
      const auto body = src.substr(i + 2, end - i - 2);
      const int start_line = line;
      line += static_cast<int>(std::count(body.begin(), body.end(), '\n'));
      out.comments.push_back({std::string(body), start_line, line});
      i = end + 2;
      continue;
    }
    if (ident_start(static_cast<unsigned char>(c))) {
      std::size_t j = i + 1;
      while (j < n && ident_part(static_cast<unsigned char>(src[j]))) ++j;
      std::string word(src.substr(i, j - i));
      const auto kind = is_keyword(word) ? Token::Kind::Keyword : Token::Kind::Identifier;
      out.tokens.push_back({kind, std::move(word), line});
      i = j;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) ||
        (c == '.' && i + 1 < n && std::isdigit(static_cast<unsigned char>(src[i + 1])))) {
      std::size_t j = i + 1;
      while (j < n) {
        const char d = src[j];
        if (std::isalnum(static_cast<unsigned char>(d)) || d == '_' || d == '.') {
          ++j;
        } else if ((d == '+' || d == '-') &&
                   (src[j - 1] == 'e' || src[j - 1] == 'E' || src[j - 1] == 'p' || src[j - 1] == 'P') &&
                   !(src[i] == '0' && i + 1 < n && (src[i + 1] == 'x' || src[i + 1] == 'X') &&
                     (src[j - 1] == 'e' || src[j - 1] == 'E'))) {
          ++j;
        } else {
          break;
        }
      }
      out.tokens.push_back({Token::Kind::Number, std::string(src.substr(i, j - i)), line});
      i = j;
      continue;
    }
    if (c == '"') {
      const int start_line = line;
      if (src.substr(i, 3) == "\"\"\"") {
        const auto end = src.find("\"\"\"", i + 3);
        if (end == std::string_view::npos) fail("unterminated text block");
        const auto body = src.substr(i, end + 3 - i);
        line += static_cast<int>(std::count(body.begin(), body.end(), '\n'));
        out.tokens.push_back({Token::Kind::String, std::string(body), start_line});
        i = end + 3;
        continue;
      }
      std::size_t j = i + 1;
      while (j < n && src[j] != '"') {
        if (src[j] == '\\') ++j;
        else if (src[j] == '\n') fail("unterminated string literal");
        ++j;
      }
      if (j >= n) fail("unterminated string literal");
      out.tokens.push_back({Token::Kind::String, std::string(src.substr(i, j + 1 - i)), line});
      i = j + 1;
      continue;
    }
    if (c == '\'') {
      std::size_t j = i + 1;
      while (j < n && src[j] != '\'') {
        if (src[j] == '\\') ++j;
        else if (src[j] == '\n') fail("unterminated character literal");
        ++j;
      }
      if (j >= n) fail("unterminated character literal");
      out.tokens.push_back({Token::Kind::Char, std::string(src.substr(i, j + 1 - i)), line});
      i = j + 1;
      continue;
    }
    bool matched = false;
    for (auto op : kOperators) {
      if (src.substr(i, op.size()) == op) {
        out.tokens.push_back({Token::Kind::Operator, std::string(op), line});
        i += op.size();
        matched = true;
        break;
      }
    }
    if (matched) continue;
    if (kSingleOperators.find(c) != std::string_view::npos) {
      out.tokens.push_back({Token::Kind::Operator, std::string(1, c), line});
      ++i;
      continue;
    }
    fail(std::string("unexpected character '") + c + "'");
  }
  out.tokens.push_back({Token::Kind::End, "", line});
  return out;
}

}  // namespace smellscope::java
