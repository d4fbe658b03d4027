#include "smellscope/metrics/extractor.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <future>
#include <optional>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "smellscope/common/error.hpp"

namespace smellscope {

namespace fs = std::filesystem;

std::vector<std::string> split_identifier(std::string_view identifier) {
  std::vector<std::string> words;
  std::string cur;
  auto flush = [&] {
    if (cur.size() >= 2) words.push_back(cur);
    cur.clear();
  };
  for (std::size_t i = 0; i < identifier.size(); ++i) {
    const auto c = static_cast<unsigned char>(identifier[i]);
    if (!std::isalnum(c)) {
      flush();
      continue;
    }
    if (std::isdigit(c)) {
      flush();
      continue;
    }
    if (std::isupper(c) && !cur.empty()) {
      const bool prev_lower = std::islower(static_cast<unsigned char>(identifier[i - 1]));
      const bool next_lower = i + 1 < identifier.size() &&
                              std::islower(static_cast<unsigned char>(identifier[i + 1]));
      if (prev_lower || next_lower) flush();
    }
    cur.push_back(static_cast<char>(std::tolower(c)));
  }
  flush();
  return words;
}

namespace {

using java::ChainSegment;
using java::SyntaxClass;
using java::SyntaxFile;
using java::SyntaxMethod;

struct ClassRecord {
  const SyntaxFile* file = nullptr;
  const SyntaxClass* syntax = nullptr;
};

struct FieldHit {
  std::string owner;
  std::string type;
};

struct MethodHit {
  std::string owner;
  std::string return_type;
};

class Resolver {
 public:
  explicit Resolver(const std::vector<SyntaxFile>& files) {
    for (const auto& f : files) {
      for (const auto& c : f.classes) {
        if (classes_.count(c.qualified_name) == 0) {
          classes_.emplace(c.qualified_name, ClassRecord{&f, &c});
          order_.push_back(c.qualified_name);
        }
      }
    }
  }

  const std::vector<std::string>& order() const { return order_; }
  const ClassRecord& record(const std::string& name) const { return classes_.at(name); }
  bool known(const std::string& name) const { return classes_.count(name) != 0; }

  // Resolves a type name as written inside `context` to a model class.
  std::optional<std::string> resolve_type(const std::string& written, const std::string& context) const {
    if (written.empty()) return std::nullopt;
    const ClassRecord& ctx = classes_.at(context);
    const std::string& pkg = ctx.file->package_name;
    const auto dot = written.find('.');
    const std::string head = written.substr(0, dot);
    // Member types of the context and its enclosing types.
    for (std::string outer = context; !outer.empty();) {
      const std::string candidate = outer + "." + written;
      if (known(candidate)) return candidate;
      outer = classes_.at(outer).syntax->enclosing;
    }
    if (known(written)) return written;
    for (const auto& imp : ctx.file->imports) {
      if (imp.size() > head.size() && imp.compare(imp.size() - head.size(), head.size(), head) == 0 &&
          imp[imp.size() - head.size() - 1] == '.') {
        const std::string candidate = imp + written.substr(head.size());
        if (known(candidate)) return candidate;
      }
    }
    const std::string same_pkg = pkg.empty() ? written : pkg + "." + written;
    if (known(same_pkg)) return same_pkg;
    for (const auto& imp : ctx.file->imports) {
      if (imp.size() > 2 && imp.compare(imp.size() - 2, 2, ".*") == 0) {
        const std::string candidate = imp.substr(0, imp.size() - 1) + written;
        if (known(candidate)) return candidate;
      }
    }
    return std::nullopt;
  }

  std::optional<std::string> superclass_of(const std::string& cls) const {
    const auto& rec = classes_.at(cls);
    if (!rec.syntax->superclass) return std::nullopt;
    return resolve_type(*rec.syntax->superclass, cls);
  }

  // Walks the model-internal superclass chain, `cls` first.
  std::vector<std::string> lineage(const std::string& cls) const {
    std::vector<std::string> chain{cls};
    std::unordered_set<std::string> seen{cls};
    for (auto sup = superclass_of(cls); sup && seen.insert(*sup).second; sup = superclass_of(*sup)) {
      chain.push_back(*sup);
    }
    return chain;
  }

  std::optional<FieldHit> find_field(const std::string& cls, const std::string& name) const {
    for (const auto& c : lineage(cls)) {
      for (const auto& f : classes_.at(c).syntax->fields) {
        if (f.name == name) return FieldHit{c, f.type};
      }
    }
    return std::nullopt;
  }

  std::optional<MethodHit> find_method(const std::string& cls, const std::string& name) const {
    for (const auto& c : lineage(cls)) {
      for (const auto& m : classes_.at(c).syntax->methods) {
        if (!m.is_constructor && m.name == name) return MethodHit{c, m.return_type};
      }
    }
    return std::nullopt;
  }

 private:
  std::unordered_map<std::string, ClassRecord> classes_;
  std::vector<std::string> order_;
};

bool starts_with_word(const std::string& name, std::string_view prefix) {
  return name.size() > prefix.size() && name.compare(0, prefix.size(), prefix) == 0 &&
         (std::isupper(static_cast<unsigned char>(name[prefix.size()])) || name[prefix.size()] == '_');
}

bool own_field(const SyntaxClass& cls, const std::string& name) {
  return std::any_of(cls.fields.begin(), cls.fields.end(),
                     [&](const auto& f) { return f.name == name; });
}

// Getter: `return f;` / `return this.f;`. Setter: `f = p;` / `this.f = p;`.
bool accessor_shape(const SyntaxClass& cls, const SyntaxMethod& m) {
  if (m.is_constructor || !m.has_body || m.statements.size() != 1) return false;
  const auto& s = m.sole_statement;
  const bool getter_name = starts_with_word(m.name, "get") || starts_with_word(m.name, "is");
  if (getter_name && m.params.empty()) {
    if (s.size() == 3 && s[0] == "return" && s[2] == ";") return own_field(cls, s[1]);
    if (s.size() == 5 && s[0] == "return" && s[1] == "this" && s[2] == "." && s[4] == ";")
      return own_field(cls, s[3]);
    return false;
  }
  if (starts_with_word(m.name, "set") && m.params.size() == 1) {
    const std::string& p = m.params[0].name;
    if (s.size() == 4 && s[1] == "=" && s[2] == p && s[3] == ";") return own_field(cls, s[0]);
    if (s.size() == 6 && s[0] == "this" && s[1] == "." && s[3] == "=" && s[4] == p && s[5] == ";")
      return own_field(cls, s[2]);
  }
  return false;
}

MethodEntity resolve_method(const Resolver& r, const std::string& cls_name, const SyntaxClass& cls,
                            const SyntaxMethod& sm) {
  MethodEntity m;
  m.owner = cls_name;
  m.name = sm.name;
  m.return_type = sm.return_type;
  m.visibility = sm.visibility;
  m.is_static = sm.is_static;
  m.is_abstract = !sm.has_body;
  m.is_constructor = sm.is_constructor;
  m.is_accessor = accessor_shape(cls, sm);
  m.start_line = sm.start_line;
  m.end_line = std::max(sm.start_line, sm.end_line);
  m.statements = sm.statements;
  m.local_variable_count = static_cast<int>(sm.locals.size());
  m.decision_points = sm.decision_points;
  m.max_nesting = sm.max_nesting;

  auto reference = [&](const std::optional<std::string>& t) {
    if (t && *t != cls_name) m.referenced_classes.insert(*t);
  };
  std::unordered_map<std::string, std::string> vars;
  for (const auto& p : sm.params) {
    m.parameter_types.push_back(p.type);
    m.parameter_names.push_back(p.name);
    vars[p.name] = p.type;
    reference(r.resolve_type(p.type, cls_name));
  }
  for (const auto& l : sm.locals) {
    vars[l.name] = l.type;
    reference(r.resolve_type(l.type, cls_name));
  }
  if (!sm.is_constructor) reference(r.resolve_type(sm.return_type, cls_name));

  using K = ChainSegment::Kind;
  std::set<std::vector<std::string>> chains;
  for (const auto& chain : sm.chains) {
    std::optional<std::string> cur;
    std::vector<std::string> called;
    std::string dotted;  // accumulates `a.b.C` while it may still name a qualified class
    for (std::size_t i = 0; i < chain.segments.size(); ++i) {
      const auto& seg = chain.segments[i];
      switch (seg.kind) {
        case K::Name: {
          if (auto v = vars.find(seg.name); v != vars.end()) {
            cur = r.resolve_type(v->second, cls_name);
          } else if (auto f = r.find_field(cls_name, seg.name)) {
            m.accessed_attributes.insert({f->owner, seg.name});
            cur = r.resolve_type(f->type, f->owner);
          } else if (auto t = r.resolve_type(seg.name, cls_name)) {
            cur = t;
          } else {
            cur.reset();
            dotted = seg.name;
          }
          reference(cur);
          break;
        }
        case K::Call: {
          called.push_back(seg.name);
          const std::string receiver = i == 0 ? cls_name : cur.value_or("");
          std::optional<MethodHit> hit;
          if (!receiver.empty()) hit = r.find_method(receiver, seg.name);
          if (hit) {
            m.calls.push_back({hit->owner, seg.name});
            cur = r.resolve_type(hit->return_type, hit->owner);
          } else {
            const bool unresolved_own = i == 0 && r.superclass_of(cls_name) == std::nullopt &&
                                        cls.superclass.has_value();
            m.calls.push_back({unresolved_own ? std::string() : receiver, seg.name});
            cur.reset();
          }
          reference(cur);
          dotted.clear();
          break;
        }
        case K::This:
          cur = cls_name;
          break;
        case K::Super:
          cur = r.superclass_of(cls_name);
          break;
        case K::New:
          cur = r.resolve_type(seg.name, cls_name);
          reference(cur);
          break;
        case K::Field: {
          if (cur) {
            if (auto f = r.find_field(*cur, seg.name)) {
              m.accessed_attributes.insert({f->owner, seg.name});
              cur = r.resolve_type(f->type, f->owner);
            } else if (auto nested = r.resolve_type(*cur + "." + seg.name, cls_name)) {
              cur = nested;
            } else {
              cur.reset();
            }
          } else if (!dotted.empty()) {
            dotted += "." + seg.name;
            cur = r.resolve_type(dotted, cls_name);
            if (cur) dotted.clear();
          }
          reference(cur);
          break;
        }
        case K::Index:
        case K::Other:
          cur.reset();
          dotted.clear();
          break;
      }
    }
    if (called.size() >= 2) chains.insert(called);
  }
  m.message_chains.assign(chains.begin(), chains.end());
  for (const auto& call : m.calls) {
    if (!call.target_class.empty() && call.target_class != cls_name) m.referenced_classes.insert(call.target_class);
  }
  return m;
}

void add_tokens(std::map<std::string, int>& bag, std::string_view text) {
  for (auto& w : split_identifier(text)) ++bag[w];
}

}  // namespace

CodeModel build_model(const std::string& release_id, const std::vector<java::SyntaxFile>& files,
                      std::vector<Diagnostic> diagnostics) {
  Resolver r(files);
  std::unordered_set<std::string> emitted;
  std::vector<ClassEntity> classes;
  for (const auto& f : files) {
    for (const auto& sc : f.classes) {
      if (!emitted.insert(sc.qualified_name).second) {
        diagnostics.push_back({f.path, sc.start_line, "duplicate class " + sc.qualified_name + " ignored"});
        continue;
      }
      ClassEntity c;
      c.qualified_name = sc.qualified_name;
      c.simple_name = sc.simple_name;
      c.package_path = split_package(f.package_name);
      c.type_kind = sc.kind;
      c.is_abstract = sc.is_abstract;
      if (sc.superclass) c.superclass = r.resolve_type(*sc.superclass, sc.qualified_name).value_or(*sc.superclass);
      c.source_span = {f.path, sc.start_line, std::max(sc.start_line, sc.end_line)};
      for (const auto& fld : sc.fields) {
        const auto resolved = r.resolve_type(fld.type, sc.qualified_name);
        c.attributes.push_back({fld.name, fld.visibility, fld.is_static, fld.is_final, resolved.value_or(fld.type)});
        if (resolved && *resolved != sc.qualified_name) c.referenced_classes.insert(*resolved);
      }
      for (const auto& sm : sc.methods) {
        MethodEntity m = resolve_method(r, sc.qualified_name, sc, sm);
        c.referenced_classes.insert(m.referenced_classes.begin(), m.referenced_classes.end());
        c.methods.push_back(std::move(m));
      }
      // Identical signatures (erased generics) get a numeric suffix to stay unique.
      std::unordered_map<std::string, int> sig_count;
      for (auto& m : c.methods) {
        const std::string sig = m.signature();
        if (int n = sig_count[sig]++; n > 0) m.name += "$" + std::to_string(n);
      }
      if (c.superclass && r.known(*c.superclass) && *c.superclass != c.qualified_name) {
        c.referenced_classes.insert(*c.superclass);
      }
      c.referenced_classes.erase(c.qualified_name);
      for (const auto& id : sc.identifiers) add_tokens(c.token_bag, id);
      for (const auto& cm : f.comments) {
        if (cm.line >= sc.start_line && cm.end_line <= c.source_span.end_line) add_tokens(c.token_bag, cm.text);
      }
      classes.push_back(std::move(c));
    }
  }
  return CodeModel(release_id, std::move(classes), std::move(diagnostics));
}

CodeModel parse_release(const fs::path& source_root, const std::string& release_id,
                        const ExtractOptions& options) {
  std::error_code ec;
  if (!fs::is_directory(source_root, ec)) {
    throw InputError("source directory does not exist: " + source_root.string());
  }
  std::vector<fs::path> sources;
  for (auto it = fs::recursive_directory_iterator(source_root, ec); it != fs::recursive_directory_iterator();
       it.increment(ec)) {
    if (ec) break;
    if (it->is_regular_file() && it->path().extension() == ".java") sources.push_back(it->path());
  }
  std::sort(sources.begin(), sources.end());

  struct Outcome {
    std::optional<java::SyntaxFile> file;
    std::optional<Diagnostic> diagnostic;
  };
  auto parse_one = [&](const fs::path& p) {
    Outcome out;
    const std::string rel = fs::relative(p, source_root).generic_string();
    std::ifstream in(p, std::ios::binary);
    std::stringstream buf;
    buf << in.rdbuf();
    try {
      out.file = java::parse_file(buf.str(), rel);
    } catch (const ParseError& e) {
      out.diagnostic = Diagnostic{rel, static_cast<int>(e.row()), e.what()};
    }
    return out;
  };

  std::vector<Outcome> outcomes(sources.size());
  const unsigned threads = std::max(1U, options.threads);
  if (threads == 1) {
    for (std::size_t i = 0; i < sources.size(); ++i) outcomes[i] = parse_one(sources[i]);
  } else {
    for (std::size_t begin = 0; begin < sources.size(); begin += threads) {
      std::vector<std::future<Outcome>> batch;
      for (std::size_t i = begin; i < std::min(sources.size(), begin + threads); ++i) {
        batch.push_back(std::async(std::launch::async, parse_one, sources[i]));
      }
      for (std::size_t i = 0; i < batch.size(); ++i) outcomes[begin + i] = batch[i].get();
    }
  }

  std::vector<java::SyntaxFile> files;
  std::vector<Diagnostic> diagnostics;
  for (auto& o : outcomes) {
    if (o.file) files.push_back(std::move(*o.file));
    if (o.diagnostic) diagnostics.push_back(std::move(*o.diagnostic));
  }
  CodeModel model = build_model(release_id, files, std::move(diagnostics));
  if (model.classes().empty()) {
    throw EmptyModelError("no parsable classes under " + source_root.string());
  }
  return model;
}

}  // namespace smellscope
