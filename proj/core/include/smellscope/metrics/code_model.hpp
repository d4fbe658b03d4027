#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

namespace smellscope {

enum class Visibility { Public, Protected, Package, Private };

struct SourceSpan {
  std::string file;  // relative to the release source root
  int start_line = 0;
  int end_line = 0;
};

struct Attribute {
  std::string name;
  Visibility visibility = Visibility::Package;
  bool is_static = false;
  bool is_final = false;
  std::string type;  // resolved qualified name for model classes, as written otherwise
};

// A call site. target_class is empty when the receiver could not be resolved.
struct CallTarget {
  std::string target_class;
  std::string target_method;
  auto operator<=>(const CallTarget&) const = default;
};

struct AttributeRef {
  std::string owner;
  std::string name;
  auto operator<=>(const AttributeRef&) const = default;
};

enum class StatementKind { Simple, Declaration, If, Loop, Switch, Try, Jump, Block };

struct Statement {
  int depth = 0;  // number of enclosing control structures
  StatementKind kind = StatementKind::Simple;
  int line = 0;
};

struct MethodEntity {
  std::string owner;  // qualified name of the declaring class
  std::string name;
  std::vector<std::string> parameter_types;
  std::vector<std::string> parameter_names;
  std::string return_type;  // empty for constructors
  Visibility visibility = Visibility::Package;
  bool is_static = false;
  bool is_abstract = false;  // no body
  bool is_constructor = false;
  bool is_accessor = false;
  int start_line = 0;
  int end_line = 0;
  std::vector<Statement> statements;
  std::vector<CallTarget> calls;
  int local_variable_count = 0;  // declared locals, parameters excluded
  std::set<AttributeRef> accessed_attributes;
  int decision_points = 0;
  int max_nesting = 0;
  // Each entry lists the called method names of one message chain (length >= 2).
  std::vector<std::vector<std::string>> message_chains;
  std::set<std::string> referenced_classes;  // model classes only, owner excluded

  // "name(T1,T2)"; unique within the owning class.
  std::string signature() const;
  std::string qualified_name() const { return owner + "#" + signature(); }
};

enum class TypeKind { Class, Interface, Enum, Record, Annotation };

struct ClassEntity {
  std::string qualified_name;
  std::string simple_name;
  std::vector<std::string> package_path;
  TypeKind type_kind = TypeKind::Class;
  bool is_abstract = false;
  std::optional<std::string> superclass;  // qualified when the superclass is a model class
  std::vector<MethodEntity> methods;
  std::vector<Attribute> attributes;
  SourceSpan source_span;
  std::map<std::string, int> token_bag;
  std::set<std::string> referenced_classes;  // model classes only, self excluded

  std::string package_name() const;
};

// Package hierarchy; the unnamed root is the empty path.
class PackageTree {
 public:
  void add(const std::vector<std::string>& path);
  bool contains(const std::vector<std::string>& path) const;
  // Number of edges on the tree path between two package nodes.
  static int distance(const std::vector<std::string>& a, const std::vector<std::string>& b);
  const std::set<std::vector<std::string>>& nodes() const noexcept { return nodes_; }

 private:
  std::set<std::vector<std::string>> nodes_{{}};
};

std::vector<std::string> split_package(const std::string& dotted);

struct Diagnostic {
  std::string file;
  int line = 0;
  std::string message;
};

// All classes of one release. Immutable once built.
class CodeModel {
 public:
  CodeModel() = default;
  CodeModel(std::string release_id, std::vector<ClassEntity> classes,
            std::vector<Diagnostic> diagnostics = {});

  const std::string& release_id() const noexcept { return release_id_; }
  const std::vector<ClassEntity>& classes() const noexcept { return classes_; }
  const PackageTree& packages() const noexcept { return packages_; }
  const std::vector<Diagnostic>& diagnostics() const noexcept { return diagnostics_; }

  const ClassEntity* find_class(const std::string& qualified_name) const;
  std::size_t method_count() const;

 private:
  std::string release_id_;
  std::vector<ClassEntity> classes_;
  PackageTree packages_;
  std::vector<Diagnostic> diagnostics_;
  std::unordered_map<std::string, std::size_t> index_;
};

}  // namespace smellscope
