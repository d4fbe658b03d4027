#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "smellscope/metrics/code_model.hpp"

// Unresolved syntax facts produced by the Java-subset parser. Name resolution and
// metric computation happen later, once every file of a release has been parsed.
namespace smellscope::java {

struct Token {
  enum class Kind { Identifier, Keyword, Number, String, Char, Operator, End };
  Kind kind = Kind::End;
  std::string text;
  int line = 0;
};

struct Comment {
  std::string text;
  int line = 0;
  int end_line = 0;
};

struct LexResult {
  std::vector<Token> tokens;  // terminated by an End token
  std::vector<Comment> comments;
};

LexResult lex(std::string_view source, const std::string& file = {});

bool is_keyword(std::string_view word) noexcept;

struct ChainSegment {
  enum class Kind { Name, Call, This, Super, New, Field, Index, Other };
  Kind kind = Kind::Other;
  std::string name;  // identifier, called method, or created type
};

// A primary expression followed by its selectors, e.g. `a.b().c`.
struct PostfixChain {
  std::vector<ChainSegment> segments;
  int line = 0;
};

struct VarDecl {
  std::string type;  // erased: no type arguments or array dimensions
  std::string name;
};

struct SyntaxField {
  std::string name;
  std::string type;
  Visibility visibility = Visibility::Package;
  bool is_static = false;
  bool is_final = false;
  int line = 0;
};

struct SyntaxMethod {
  std::string name;
  std::string return_type;
  std::vector<VarDecl> params;
  std::vector<VarDecl> locals;
  Visibility visibility = Visibility::Package;
  bool is_static = false;
  bool is_constructor = false;
  bool has_body = false;
  int start_line = 0;
  int end_line = 0;
  std::vector<Statement> statements;
  int decision_points = 0;
  int max_nesting = 0;
  std::vector<PostfixChain> chains;
  // Token texts of the only statement when the body holds exactly one.
  std::vector<std::string> sole_statement;
};

struct SyntaxClass {
  std::string simple_name;
  std::string qualified_name;
  std::string enclosing;  // qualified name of the enclosing type, if nested
  TypeKind kind = TypeKind::Class;
  bool is_abstract = false;
  std::optional<std::string> superclass;
  std::vector<std::string> interfaces;
  std::vector<SyntaxField> fields;
  std::vector<SyntaxMethod> methods;
  int start_line = 0;
  int end_line = 0;
  std::vector<std::string> identifiers;  // raw identifiers inside the body
};

struct SyntaxFile {
  std::string path;
  std::string package_name;
  std::vector<std::string> imports;  // "a.b.C" or "a.b.*"
  std::vector<SyntaxClass> classes;  // outer types precede the types nested in them
  std::vector<Comment> comments;
};

// Throws ParseError on malformed input.
SyntaxFile parse_file(std::string_view source, const std::string& path);

}  // namespace smellscope::java
