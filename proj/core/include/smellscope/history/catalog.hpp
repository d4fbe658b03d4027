#pragma once

#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "smellscope/metrics/code_model.hpp"
#include "smellscope/metrics/metric.hpp"

namespace smellscope {

// What the history miner needs to know about a class at one release.
struct ClassInfo {
  std::string qualified_name;
  std::string package;  // dotted, empty for the default package
  double loc = 0;
  std::map<std::string, int> tokens;

  friend bool operator==(const ClassInfo&, const ClassInfo&) = default;
};

class ReleaseCatalog {
 public:
  ReleaseCatalog() = default;
  ReleaseCatalog(std::string release, std::vector<ClassInfo> classes);

  const std::string& release() const noexcept { return release_; }
  const std::vector<ClassInfo>& classes() const noexcept { return classes_; }
  const PackageTree& packages() const noexcept { return packages_; }
  const ClassInfo* find(const std::string& qualified_name) const;
  bool contains(const std::string& qualified_name) const { return find(qualified_name) != nullptr; }

 private:
  std::string release_;
  std::vector<ClassInfo> classes_;
  PackageTree packages_;
  std::unordered_map<std::string, std::size_t> index_;
};

// LOC comes from the class vectors of `metrics`.
ReleaseCatalog build_catalog(const CodeModel& model, const std::vector<EntityMetricVector>& metrics);

// classes.csv: release,qualified_name,package,loc,tokens ("word:count" items separated by spaces)
std::string catalog_table_string(const std::vector<ReleaseCatalog>& catalogs);
std::vector<ReleaseCatalog> parse_catalog_table(const std::vector<std::string>& lines, const std::string& source = {});
std::vector<ReleaseCatalog> load_catalog_table(const std::string& path);

}  // namespace smellscope
