#include <algorithm>
#include <array>
#include <cstddef>
#include <string>
#include <string_view>

#include "smellscope/common/error.hpp"
#include "smellscope/metrics/java_syntax.hpp"

namespace smellscope::java {

namespace {

constexpr std::array<std::string_view, 8> kPrimitives = {"boolean", "byte", "char", "short",
                                                         "int",     "long", "float", "double"};

bool is_primitive(std::string_view s) {
  return s == "void" || std::find(kPrimitives.begin(), kPrimitives.end(), s) != kPrimitives.end();
}

bool is_modifier(std::string_view s) {
  return s == "public" || s == "protected" || s == "private" || s == "static" || s == "final" ||
         s == "abstract" || s == "native" || s == "synchronized" || s == "transient" ||
         s == "volatile" || s == "strictfp" || s == "default";
}

struct Modifiers {
  std::optional<Visibility> visibility;
  bool is_static = false;
  bool is_abstract = false;
  bool is_final = false;
  bool is_default = false;
  int first_line = 0;
};

class Parser {
 public:
  Parser(std::vector<Token> tokens, std::string path) : toks_(std::move(tokens)), path_(std::move(path)) {}

  SyntaxFile parse() {
    file_.path = path_;
    skip_annotations();
    if (accept("package")) {
      file_.package_name = qualified_name();
      expect(";");
    }
    while (at("import")) {
      advance();
      accept("static");
      std::string name = qualified_name();
      if (accept(".")) {
        expect("*");
        name += ".*";
      }
      expect(";");
      file_.imports.push_back(std::move(name));
    }
    while (!at_end()) {
      if (accept(";")) continue;
      const int line = peek().line;
      Modifiers mods = modifiers();
      if (!mods.first_line) mods.first_line = line;
      if (!at_type_keyword()) fail("expected a type declaration");
      type_declaration(mods, "");
    }
    return std::move(file_);
  }

 private:
  // ---- token helpers -------------------------------------------------------

  const Token& peek(std::size_t k = 0) const {
    const std::size_t idx = std::min(pos_ + k, toks_.size() - 1);
    return toks_[idx];
  }
  bool at_end() const { return peek().kind == Token::Kind::End; }
  bool at(std::string_view text) const {
    const auto& t = peek();
    return t.kind != Token::Kind::String && t.kind != Token::Kind::Char && t.text == text;
  }
  bool at_ident() const { return peek().kind == Token::Kind::Identifier; }
  const Token& advance() {
    const Token& t = peek();
    if (!at_end()) ++pos_;
    return t;
  }
  bool accept(std::string_view text) {
    if (!at(text)) return false;
    advance();
    return true;
  }
  void expect(std::string_view text) {
    if (!accept(text)) fail("expected '" + std::string(text) + "' but found '" + peek().text + "'");
  }
  std::string identifier() {
    if (!at_ident()) fail("expected identifier but found '" + peek().text + "'");
    return advance().text;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, path_, static_cast<std::size_t>(peek().line));
  }

  static bool is_open(std::string_view s) { return s == "(" || s == "[" || s == "{"; }
  static bool is_close(std::string_view s) { return s == ")" || s == "]" || s == "}"; }
  static std::string_view closer(std::string_view open) {
    return open == "(" ? ")" : open == "[" ? "]" : "}";
  }

  // Index one past the bracket matching the opener at `from`.
  std::size_t match(std::size_t from) const {
    std::vector<std::string_view> stack;
    for (std::size_t i = from; i < toks_.size(); ++i) {
      const auto& t = toks_[i];
      if (t.kind == Token::Kind::End) break;
      if (t.kind != Token::Kind::Operator) continue;
      if (is_open(t.text)) {
        stack.push_back(closer(t.text));
      } else if (is_close(t.text)) {
        if (stack.empty() || stack.back() != t.text) {
          throw ParseError("unbalanced '" + t.text + "'", path_, static_cast<std::size_t>(t.line));
        }
        stack.pop_back();
        if (stack.empty()) return i + 1;
      }
    }
    throw ParseError("unbalanced '" + toks_[from].text + "'", path_,
                     static_cast<std::size_t>(toks_[from].line));
  }

  void skip_balanced() { pos_ = match(pos_); }

  // Skips a `<...>` type argument/parameter list starting at the current token.
  void skip_angles() {
    int depth = 0;
    do {
      if (at_end()) fail("unterminated type arguments");
      if (at("<")) ++depth;
      else if (at(">")) --depth;
      else if (at("(") || at(";") || at("{")) fail("malformed type arguments");
      advance();
    } while (depth > 0);
  }

  std::string qualified_name() {
    std::string name = identifier();
    while (at(".") && peek(1).kind == Token::Kind::Identifier) {
      advance();
      name += "." + advance().text;
    }
    return name;
  }

  void skip_annotations() {
    while (at("@") && peek(1).text != "interface") {
      advance();
      qualified_name();
      if (at("(")) skip_balanced();
    }
  }

  Modifiers modifiers() {
    Modifiers m;
    for (;;) {
      if (!m.first_line) m.first_line = peek().line;
      if (at("@") && peek(1).text != "interface") {
        skip_annotations();
        continue;
      }
      const auto& t = peek();
      if (t.kind == Token::Kind::Keyword && is_modifier(t.text)) {
        // `default` starts a switch label inside bodies; here it is an interface method modifier.
        if (t.text == "public") m.visibility = Visibility::Public;
        else if (t.text == "protected") m.visibility = Visibility::Protected;
        else if (t.text == "private") m.visibility = Visibility::Private;
        else if (t.text == "static") m.is_static = true;
        else if (t.text == "abstract") m.is_abstract = true;
        else if (t.text == "final") m.is_final = true;
        else if (t.text == "default") m.is_default = true;
        advance();
        continue;
      }
      if (t.text == "sealed" && (peek(1).kind == Token::Kind::Keyword || peek(1).text == "record")) {
        advance();
        continue;
      }
      if (t.text == "non" && peek(1).text == "-" && peek(2).text == "sealed") {
        advance();
        advance();
        advance();
        continue;
      }
      return m;
    }
  }

  bool at_type_keyword() const {
    if (at("class") || at("interface") || at("enum")) return true;
    if (at("@") && peek(1).text == "interface") return true;
    return peek().text == "record" && peek(1).kind == Token::Kind::Identifier;
  }

  // Erased type: `java.util.Map<K, V>[]` -> "java.util.Map".
  std::string type() {
    skip_annotations();
    std::string name;
    if (peek().kind == Token::Kind::Keyword && is_primitive(peek().text)) {
      name = advance().text;
    } else {
      name = identifier();
      if (at("<")) skip_angles();
      while (at(".") && peek(1).kind == Token::Kind::Identifier) {
        advance();
        name += "." + advance().text;
        if (at("<")) skip_angles();
      }
    }
    while (at("[") && peek(1).text == "]") {
      advance();
      advance();
    }
    return name;
  }

  // ---- declarations --------------------------------------------------------

  void type_declaration(const Modifiers& mods, const std::string& enclosing) {
    SyntaxClass cls;
    cls.start_line = mods.first_line ? mods.first_line : peek().line;
    if (accept("@")) {
      expect("interface");
      cls.kind = TypeKind::Annotation;
    } else if (accept("class")) {
      cls.kind = TypeKind::Class;
    } else if (accept("interface")) {
      cls.kind = TypeKind::Interface;
    } else if (accept("enum")) {
      cls.kind = TypeKind::Enum;
    } else if (accept("record")) {
      cls.kind = TypeKind::Record;
    } else {
      fail("expected a type declaration");
    }
    cls.is_abstract = mods.is_abstract || cls.kind == TypeKind::Interface;
    cls.simple_name = identifier();
    cls.enclosing = enclosing;
    if (!enclosing.empty()) {
      cls.qualified_name = enclosing + "." + cls.simple_name;
    } else if (!file_.package_name.empty()) {
      cls.qualified_name = file_.package_name + "." + cls.simple_name;
    } else {
      cls.qualified_name = cls.simple_name;
    }
    if (at("<")) skip_angles();
    if (cls.kind == TypeKind::Record) {
      expect("(");
      while (!at(")")) {
        skip_annotations();
        SyntaxField f;
        f.line = peek().line;
        f.type = type();
        f.name = identifier();
        f.visibility = Visibility::Private;
        f.is_final = true;
        cls.fields.push_back(std::move(f));
        if (!accept(",")) break;
      }
      expect(")");
    }
    if (accept("extends")) {
      if (cls.kind == TypeKind::Interface) {
        cls.interfaces.push_back(type());
        while (accept(",")) cls.interfaces.push_back(type());
      } else {
        cls.superclass = type();
      }
    }
    if (accept("implements")) {
      cls.interfaces.push_back(type());
      while (accept(",")) cls.interfaces.push_back(type());
    }
    if (accept("permits")) {
      type();
      while (accept(",")) type();
    }
    if (!at("{")) fail("expected class body");
    const std::size_t body_begin = pos_;
    const std::size_t body_end = match(pos_);
    for (std::size_t i = body_begin; i < body_end; ++i) {
      if (toks_[i].kind == Token::Kind::Identifier) cls.identifiers.push_back(toks_[i].text);
    }
    const std::size_t index = file_.classes.size();
    file_.classes.push_back(std::move(cls));
    class_body(index);
  }

  void class_body(std::size_t index) {
    expect("{");
    const auto kind = file_.classes[index].kind;
    const bool interface_like = kind == TypeKind::Interface || kind == TypeKind::Annotation;
    if (kind == TypeKind::Enum) enum_constants();
    while (!at("}")) {
      if (at_end()) fail("unterminated class body");
      member(index, interface_like);
    }
    file_.classes[index].end_line = peek().line;
    expect("}");
  }

  void enum_constants() {
    while (!at(";") && !at("}")) {
      skip_annotations();
      identifier();
      if (at("(")) skip_balanced();
      if (at("{")) skip_balanced();
      if (!accept(",")) break;
    }
    accept(";");
  }

  void member(std::size_t index, bool interface_like) {
    if (accept(";")) return;
    if (at("{")) {
      skip_balanced();
      return;
    }
    if (at("static") && peek(1).text == "{") {
      advance();
      skip_balanced();
      return;
    }
    const int first_line = peek().line;
    Modifiers mods = modifiers();
    mods.first_line = first_line;
    if (at_type_keyword()) {
      const std::string outer = file_.classes[index].qualified_name;
      type_declaration(mods, outer);
      return;
    }
    if (at("<")) skip_angles();

    const std::string simple = file_.classes[index].simple_name;
    Visibility vis = mods.visibility.value_or(interface_like ? Visibility::Public : Visibility::Package);

    if (at_ident() && peek().text == simple && (peek(1).text == "(" || peek(1).text == "{")) {
      advance();
      SyntaxMethod m;
      m.name = simple;
      m.is_constructor = true;
      m.visibility = vis;
      m.start_line = first_line;
      if (at("(")) parameters(m);
      method_rest(m);
      file_.classes[index].methods.push_back(std::move(m));
      return;
    }

    std::string decl_type = type();
    std::string name = identifier();
    if (at("(")) {
      SyntaxMethod m;
      m.name = std::move(name);
      m.return_type = std::move(decl_type);
      m.visibility = vis;
      m.is_static = mods.is_static;
      m.start_line = first_line;
      parameters(m);
      method_rest(m);
      if (interface_like && !m.has_body) file_.classes[index].is_abstract = true;
      file_.classes[index].methods.push_back(std::move(m));
      return;
    }

    // Field declarators: `T a = x, b[], c = y;`
    const bool is_static = mods.is_static || interface_like;
    const bool is_final = mods.is_final || interface_like;
    for (;;) {
      while (at("[") && peek(1).text == "]") {
        advance();
        advance();
      }
      file_.classes[index].fields.push_back({name, decl_type, vis, is_static, is_final, first_line});
      if (accept("=")) skip_initializer();
      if (accept(";")) break;
      expect(",");
      name = identifier();
    }
  }

  // Skips a field initializer up to the `,` that starts the next declarator or the `;`.
  void skip_initializer() {
    for (;;) {
      if (at_end()) fail("unterminated field initializer");
      if (at(";")) return;
      if (at(",")) {
        const auto& next = peek(1);
        const auto& after = peek(2);
        if (next.kind == Token::Kind::Identifier &&
            (after.text == "=" || after.text == "," || after.text == ";" || after.text == "[")) {
          return;
        }
        advance();
        continue;
      }
      if (is_open(peek().text) && peek().kind == Token::Kind::Operator) {
        skip_balanced();
        continue;
      }
      if (is_close(peek().text) && peek().kind == Token::Kind::Operator) fail("unbalanced '" + peek().text + "'");
      advance();
    }
  }

  void parameters(SyntaxMethod& m) {
    expect("(");
    while (!at(")")) {
      modifiers();
      std::string t = type();
      if (accept("...")) t += "[]";
      if (at("this")) {
        advance();
      } else {
        std::string name = identifier();
        while (at("[") && peek(1).text == "]") {
          advance();
          advance();
        }
        m.params.push_back({std::move(t), std::move(name)});
      }
      if (!accept(",")) break;
    }
    expect(")");
  }

  void method_rest(SyntaxMethod& m) {
    while (at("[") && peek(1).text == "]") {
      advance();
      advance();
    }
    if (accept("throws")) {
      type();
      while (accept(",")) type();
    }
    if (accept("default")) {
      while (!at(";")) {
        if (at_end()) fail("unterminated annotation default");
        if (is_open(peek().text)) skip_balanced();
        else advance();
      }
    }
    if (at(";")) {
      m.end_line = peek().line;
      advance();
      return;
    }
    if (!at("{")) fail("expected method body");
    m.has_body = true;
    body_ = &m;
    block(0);
    m.end_line = toks_[pos_ - 1].line;
    if (m.statements.size() == 1 && (m.statements[0].kind == StatementKind::Simple ||
                                     m.statements[0].kind == StatementKind::Jump)) {
      m.sole_statement = std::move(last_simple_);
    }
    body_ = nullptr;
  }

  // ---- statements ----------------------------------------------------------

  void record(int depth, StatementKind kind, int line) {
    body_->statements.push_back({depth, kind, line});
  }

  void control(int depth, bool decision) {
    body_->max_nesting = std::max(body_->max_nesting, depth + 1);
    if (decision) ++body_->decision_points;
  }

  void block(int depth) {
    expect("{");
    while (!at("}")) {
      if (at_end()) fail("unterminated block");
      statement(depth);
    }
    expect("}");
  }

  // Scans a parenthesized expression, leaving the cursor after `)`.
  void paren_expression() {
    if (!at("(")) fail("expected '('");
    const std::size_t end = match(pos_);
    scan(pos_ + 1, end - 1);
    pos_ = end;
  }

  // Index of the `;` terminating the statement that starts at `from`.
  std::size_t statement_end(std::size_t from) const {
    std::size_t i = from;
    while (i < toks_.size()) {
      const auto& t = toks_[i];
      if (t.kind == Token::Kind::End) break;
      if (t.kind == Token::Kind::Operator) {
        if (t.text == ";") return i;
        if (is_open(t.text)) {
          i = match(i);
          continue;
        }
        if (is_close(t.text)) break;
      }
      ++i;
    }
    throw ParseError("missing ';'", path_, static_cast<std::size_t>(toks_[from].line));
  }

  void statement(int depth) {
    const int line = peek().line;
    const auto& t = peek();
    if (t.kind == Token::Kind::Operator && t.text == "{") {
      block(depth);
      return;
    }
    if (accept(";")) return;
    if (t.kind == Token::Kind::Keyword || t.kind == Token::Kind::Identifier) {
      const std::string word = t.text;
      if (word == "if") {
        record(depth, StatementKind::If, line);
        control(depth, true);
        advance();
        paren_expression();
        statement(depth + 1);
        while (accept("else")) {
          if (at("if")) {
            record(depth, StatementKind::If, peek().line);
            control(depth, true);
            advance();
            paren_expression();
            statement(depth + 1);
          } else {
            statement(depth + 1);
            break;
          }
        }
        return;
      }
      if (word == "while") {
        record(depth, StatementKind::Loop, line);
        control(depth, true);
        advance();
        paren_expression();
        statement(depth + 1);
        return;
      }
      if (word == "do") {
        record(depth, StatementKind::Loop, line);
        control(depth, true);
        advance();
        statement(depth + 1);
        expect("while");
        paren_expression();
        expect(";");
        return;
      }
      if (word == "for") {
        record(depth, StatementKind::Loop, line);
        control(depth, true);
        advance();
        for_header();
        statement(depth + 1);
        return;
      }
      if (word == "switch") {
        record(depth, StatementKind::Switch, line);
        control(depth, false);
        advance();
        paren_expression();
        switch_body(depth);
        return;
      }
      if (word == "try") {
        record(depth, StatementKind::Try, line);
        control(depth, false);
        advance();
        if (at("(")) resources();
        block(depth + 1);
        while (at("catch")) {
          control(depth, true);
          advance();
          expect("(");
          modifiers();
          type();
          while (accept("|")) type();
          identifier();
          expect(")");
          block(depth + 1);
        }
        if (accept("finally")) block(depth + 1);
        return;
      }
      if (word == "synchronized" && peek(1).text == "(") {
        record(depth, StatementKind::Block, line);
        advance();
        paren_expression();
        block(depth);
        return;
      }
      if (word == "return" || word == "throw" || word == "assert" ||
          (word == "yield" && peek(1).text != "=" && peek(1).text != "(" && peek(1).text != ".")) {
        record(depth, StatementKind::Jump, line);
        const std::size_t end = statement_end(pos_);
        capture_simple(pos_, end);
        scan(pos_ + 1, end);
        pos_ = end + 1;
        return;
      }
      if (word == "break" || word == "continue") {
        record(depth, StatementKind::Jump, line);
        pos_ = statement_end(pos_) + 1;
        return;
      }
      if (word == "else" || word == "case" || word == "catch" || word == "finally") {
        fail("unexpected '" + word + "'");
      }
      if (t.kind == Token::Kind::Identifier && peek(1).text == ":" ) {
        advance();
        advance();
        statement(depth);
        return;
      }
      if (word == "class" || word == "interface" || word == "enum" ||
          (word == "record" && peek(1).kind == Token::Kind::Identifier && peek(2).text != "=")) {
        // Local type declaration: not part of the enclosing method's metrics.
        while (!at("{")) {
          if (at_end()) fail("unterminated local type");
          advance();
        }
        skip_balanced();
        return;
      }
    }
    const std::size_t end = statement_end(pos_);
    simple_statement(pos_, end, depth, line);
    pos_ = end + 1;
  }

  void for_header() {
    if (!at("(")) fail("expected '(' after for");
    const std::size_t close = match(pos_) - 1;
    const std::size_t begin = pos_ + 1;
    std::vector<std::size_t> semis;
    for (std::size_t i = begin; i < close; ++i) {
      const auto& t = toks_[i];
      if (t.kind == Token::Kind::Operator && is_open(t.text)) {
        i = match(i) - 1;
        continue;
      }
      if (t.text == ";" && t.kind == Token::Kind::Operator) semis.push_back(i);
    }
    if (semis.size() == 2) {
      declaration_or_expression(begin, semis[0]);
      scan(semis[0] + 1, semis[1]);
      scan(semis[1] + 1, close);
    } else if (semis.empty()) {
      std::size_t colon = close;
      for (std::size_t i = begin; i < close; ++i) {
        if (toks_[i].text == ":" && toks_[i].kind == Token::Kind::Operator) {
          colon = i;
          break;
        }
      }
      if (colon == close) fail("malformed for header");
      declaration_or_expression(begin, colon);
      scan(colon + 1, close);
    } else {
      fail("malformed for header");
    }
    pos_ = close + 1;
  }

  void resources() {
    const std::size_t close = match(pos_) - 1;
    std::size_t start = pos_ + 1;
    for (std::size_t i = start; i <= close; ++i) {
      const auto& t = toks_[i];
      if (i < close && t.kind == Token::Kind::Operator && is_open(t.text)) {
        i = match(i) - 1;
        continue;
      }
      if (i == close || (t.kind == Token::Kind::Operator && t.text == ";")) {
        if (i > start) declaration_or_expression(start, i);
        start = i + 1;
      }
    }
    pos_ = close + 1;
  }

  void switch_body(int depth) {
    expect("{");
    while (!at("}")) {
      if (at_end()) fail("unterminated switch");
      if (at("case") || at("default")) {
        if (at("case")) ++body_->decision_points;
        advance();
        while (!at(":") && !at("->")) {
          if (at_end() || at("}")) fail("malformed switch label");
          if (is_open(peek().text) && peek().kind == Token::Kind::Operator) skip_balanced();
          else advance();
        }
        if (accept("->")) {
          if (at("{")) block(depth + 1);
          else statement(depth + 1);
        } else {
          advance();
        }
        continue;
      }
      statement(depth + 1);
    }
    expect("}");
  }

  void capture_simple(std::size_t begin, std::size_t end) {
    last_simple_.clear();
    for (std::size_t i = begin; i <= end && i < toks_.size(); ++i) last_simple_.push_back(toks_[i].text);
  }

  void simple_statement(std::size_t begin, std::size_t end, int depth, int line) {
    capture_simple(begin, end);
    const bool decl = declaration_or_expression(begin, end);
    record(depth, decl ? StatementKind::Declaration : StatementKind::Simple, line);
  }

  // Position after a type starting at `i`, or npos when no type starts there.
  std::size_t type_end(std::size_t i, std::size_t end) const {
    if (i >= end) return std::string::npos;
    const auto& t = toks_[i];
    if (t.kind == Token::Kind::Keyword) {
      if (!is_primitive(t.text) || t.text == "void") return std::string::npos;
      ++i;
    } else if (t.kind == Token::Kind::Identifier) {
      ++i;
      for (;;) {
        if (i < end && toks_[i].text == "<") {
          int d = 0;
          std::size_t j = i;
          for (; j < end; ++j) {
            const auto& s = toks_[j].text;
            if (s == "<") ++d;
            else if (s == ">") {
              if (--d == 0) break;
            } else if (!(toks_[j].kind == Token::Kind::Identifier || s == "," || s == "." || s == "?" ||
                         s == "extends" || s == "super" || s == "[" || s == "]" || s == "&" ||
                         is_primitive(s))) {
              return std::string::npos;
            }
          }
          if (j >= end) return std::string::npos;
          i = j + 1;
        }
        if (i + 1 < end && toks_[i].text == "." && toks_[i + 1].kind == Token::Kind::Identifier) {
          i += 2;
          continue;
        }
        break;
      }
    } else {
      return std::string::npos;
    }
    while (i + 1 < end && toks_[i].text == "[" && toks_[i + 1].text == "]") i += 2;
    return i;
  }

  static std::string erased(const std::vector<Token>& toks, std::size_t b, std::size_t e) {
    std::string out;
    int angle = 0;
    for (std::size_t i = b; i < e; ++i) {
      const auto& s = toks[i].text;
      if (s == "<") ++angle;
      else if (s == ">") --angle;
      else if (angle == 0 && s != "[" && s != "]") out += s;
    }
    return out;
  }

  // Records local variable declarations in [begin, end) and scans expressions.
  // Returns true when the range declares variables.
  bool declaration_or_expression(std::size_t begin, std::size_t end) {
    std::size_t i = begin;
    while (i < end && (toks_[i].text == "final" || toks_[i].text == "@")) {
      if (toks_[i].text == "@") {
        ++i;
        while (i < end && (toks_[i].kind == Token::Kind::Identifier || toks_[i].text == ".")) ++i;
        if (i < end && toks_[i].text == "(") i = match(i);
      } else {
        ++i;
      }
    }
    const std::size_t te = type_end(i, end);
    const bool is_decl = te != std::string::npos && te < end && toks_[te].kind == Token::Kind::Identifier &&
                         (te + 1 == end || toks_[te + 1].text == "=" || toks_[te + 1].text == "," ||
                          toks_[te + 1].text == "[" || toks_[te + 1].text == ":");
    if (!is_decl) {
      scan(begin, end);
      return false;
    }
    const std::string decl_type = erased(toks_, i, te);
    std::size_t j = te;
    for (;;) {
      body_->locals.push_back({decl_type, toks_[j].text});
      ++j;
      while (j + 1 < end && toks_[j].text == "[" && toks_[j + 1].text == "]") j += 2;
      std::size_t next = end;
      if (j < end && toks_[j].text == "=") {
        // Initializer runs to the next top-level comma that starts another declarator.
        std::size_t k = j + 1;
        for (; k < end; ++k) {
          const auto& t = toks_[k];
          if (t.kind == Token::Kind::Operator && is_open(t.text)) {
            k = match(k) - 1;
            continue;
          }
          if (t.text == "," && k + 1 < end && toks_[k + 1].kind == Token::Kind::Identifier &&
              (k + 2 == end || toks_[k + 2].text == "=" || toks_[k + 2].text == "," || toks_[k + 2].text == "[")) {
            break;
          }
        }
        scan(j + 1, k);
        next = k;
      } else {
        next = j;
      }
      if (next < end && toks_[next].text == "," && next + 1 < end &&
          toks_[next + 1].kind == Token::Kind::Identifier) {
        j = next + 1;
        continue;
      }
      break;
    }
    return true;
  }

  // ---- expressions ---------------------------------------------------------

  bool starts_primary(std::size_t i) const {
    const auto& t = toks_[i];
    if (t.kind == Token::Kind::Identifier) return true;
    return t.kind == Token::Kind::Keyword && (t.text == "this" || t.text == "super" || t.text == "new");
  }

  void scan(std::size_t begin, std::size_t end) {
    std::size_t i = begin;
    while (i < end) {
      const auto& t = toks_[i];
      if (t.kind == Token::Kind::Operator) {
        if (t.text == "&&" || t.text == "||") {
          ++body_->decision_points;
        } else if (t.text == "?") {
          const auto& next = toks_[i + 1].text;
          const bool wildcard = (i > begin && (toks_[i - 1].text == "<" || toks_[i - 1].text == ",")) &&
                                (next == ">" || next == "," || next == "extends" || next == "super");
          if (!wildcard) ++body_->decision_points;
        } else if (t.text == "." && i + 1 < end && toks_[i + 1].kind == Token::Kind::Identifier) {
          i = chain(i, end, true);
          continue;
        }
        ++i;
        continue;
      }
      if (t.kind == Token::Kind::Keyword &&
          (t.text == "if" || t.text == "for" || t.text == "while" || t.text == "case" || t.text == "catch")) {
        ++body_->decision_points;
        ++i;
        continue;
      }
      if (starts_primary(i) && (i == begin || (toks_[i - 1].text != "." && toks_[i - 1].text != "::"))) {
        i = chain(i, end, false);
        continue;
      }
      ++i;
    }
  }

  // Parses a primary plus selectors starting at `i`; returns the index after it.
  std::size_t chain(std::size_t i, std::size_t end, bool from_selector) {
    PostfixChain c;
    c.line = toks_[i].line;
    using K = ChainSegment::Kind;
    auto args = [&](std::size_t open) {
      const std::size_t close = match(open);
      scan(open + 1, close - 1);
      return close;
    };
    if (from_selector) {
      c.segments.push_back({K::Other, ""});
    } else if (toks_[i].text == "new") {
      ++i;
      while (i < end && toks_[i].text == "@") {
        ++i;
        while (i < end && (toks_[i].kind == Token::Kind::Identifier || toks_[i].text == ".")) ++i;
      }
      std::string created;
      while (i < end && (toks_[i].kind == Token::Kind::Identifier || is_primitive(toks_[i].text) ||
                         toks_[i].text == ".")) {
        created += toks_[i].text;
        ++i;
        if (i < end && toks_[i].text == "<") {
          int d = 0;
          for (; i < end; ++i) {
            if (toks_[i].text == "<") ++d;
            else if (toks_[i].text == ">" && --d == 0) break;
          }
          ++i;
        }
      }
      c.segments.push_back({K::New, created});
      if (i < end && toks_[i].text == "(") {
        i = args(i);
        if (i < end && toks_[i].text == "{") i = args(i);
      } else {
        while (i < end && toks_[i].text == "[") i = args(i);
        if (i < end && toks_[i].text == "{") i = args(i);
        body_->chains.push_back(std::move(c));
        return i;
      }
    } else if (toks_[i].text == "this" || toks_[i].text == "super") {
      const bool is_this = toks_[i].text == "this";
      ++i;
      if (i < end && toks_[i].text == "(") {
        i = args(i);
        c.segments.push_back({K::Other, ""});
      } else {
        c.segments.push_back({is_this ? K::This : K::Super, ""});
      }
    } else {
      const std::string name = toks_[i].text;
      ++i;
      if (i < end && toks_[i].text == "->") return i;
      if (i < end && toks_[i].text == "(") {
        c.segments.push_back({K::Call, name});
        i = args(i);
      } else {
        c.segments.push_back({K::Name, name});
      }
    }
    while (i < end) {
      const auto& s = toks_[i].text;
      if (s == "." && i + 1 < end) {
        ++i;
        if (toks_[i].text == "<") {
          int d = 0;
          for (; i < end; ++i) {
            if (toks_[i].text == "<") ++d;
            else if (toks_[i].text == ">" && --d == 0) break;
          }
          ++i;
          if (i >= end) break;
        }
        const auto& t = toks_[i];
        if (t.kind == Token::Kind::Identifier) {
          ++i;
          if (i < end && toks_[i].text == "(") {
            c.segments.push_back({K::Call, t.text});
            i = args(i);
          } else {
            c.segments.push_back({K::Field, t.text});
          }
        } else if (t.text == "new") {
          body_->chains.push_back(std::move(c));
          return chain(i, end, false);
        } else {
          c.segments.push_back({K::Other, t.text});
          ++i;
        }
      } else if (s == "[") {
        c.segments.push_back({K::Index, ""});
        i = args(i);
      } else if (s == "::") {
        i += 2;
        break;
      } else {
        break;
      }
    }
    body_->chains.push_back(std::move(c));
    return i;
  }

  std::vector<Token> toks_;
  std::string path_;
  std::size_t pos_ = 0;
  SyntaxFile file_;
  SyntaxMethod* body_ = nullptr;
  std::vector<std::string> last_simple_;
};

}  // namespace

SyntaxFile parse_file(std::string_view source, const std::string& path) {
  LexResult lexed = lex(source, path);
  Parser parser(std::move(lexed.tokens), path);
  SyntaxFile file = parser.parse();
  file.comments = std::move(lexed.comments);
  return file;
}

}  // namespace smellscope::java
