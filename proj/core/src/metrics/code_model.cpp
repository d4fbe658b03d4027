#include "smellscope/metrics/code_model.hpp"

#include <algorithm>

#include "smellscope/common/error.hpp"

namespace smellscope {

std::string MethodEntity::signature() const {
  std::string sig = name + "(";
  for (std::size_t i = 0; i < parameter_types.size(); ++i) {
    if (i != 0) sig += ",";
    sig += parameter_types[i];
  }
  return sig + ")";
}

std::string ClassEntity::package_name() const {
  std::string out;
  for (const auto& part : package_path) {
    if (!out.empty()) out += ".";
    out += part;
  }
  return out;
}

void PackageTree::add(const std::vector<std::string>& path) {
  for (std::size_t n = 0; n <= path.size(); ++n) {
    nodes_.insert(std::vector<std::string>(path.begin(), path.begin() + static_cast<long>(n)));
  }
}

bool PackageTree::contains(const std::vector<std::string>& path) const {
  return nodes_.count(path) != 0;
}

int PackageTree::distance(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  std::size_t common = 0;
  while (common < a.size() && common < b.size() && a[common] == b[common]) ++common;
  return static_cast<int>((a.size() - common) + (b.size() - common));
}

std::vector<std::string> split_package(const std::string& dotted) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (start < dotted.size()) {
    auto dot = dotted.find('.', start);
    if (dot == std::string::npos) dot = dotted.size();
    if (dot > start) parts.push_back(dotted.substr(start, dot - start));
    start = dot + 1;
  }
  return parts;
}

CodeModel::CodeModel(std::string release_id, std::vector<ClassEntity> classes,
                     std::vector<Diagnostic> diagnostics)
    : release_id_(std::move(release_id)),
      classes_(std::move(classes)),
      diagnostics_(std::move(diagnostics)) {
  for (std::size_t i = 0; i < classes_.size(); ++i) {
    const auto& cls = classes_[i];
    if (!index_.emplace(cls.qualified_name, i).second) {
      throw ConsistencyError("duplicate class " + cls.qualified_name);
    }
    if (cls.source_span.start_line > cls.source_span.end_line) {
      throw ConsistencyError("inverted source span for " + cls.qualified_name);
    }
    for (const auto& m : cls.methods) {
      if (m.owner != cls.qualified_name) {
        throw ConsistencyError("method " + m.name + " does not belong to " + cls.qualified_name);
      }
    }
    packages_.add(cls.package_path);
  }
}

const ClassEntity* CodeModel::find_class(const std::string& qualified_name) const {
  auto it = index_.find(qualified_name);
  return it == index_.end() ? nullptr : &classes_[it->second];
}

std::size_t CodeModel::method_count() const {
  std::size_t n = 0;
  for (const auto& c : classes_) n += c.methods.size();
  return n;
}

}  // namespace smellscope
