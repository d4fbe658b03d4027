#include "smellscope/history/catalog.hpp"

#include <charconv>
#include <sstream>

#include "smellscope/common/csv.hpp"
#include "smellscope/common/error.hpp"

namespace smellscope {

ReleaseCatalog::ReleaseCatalog(std::string release, std::vector<ClassInfo> classes)
    : release_(std::move(release)), classes_(std::move(classes)) {
  for (std::size_t i = 0; i < classes_.size(); ++i) {
    if (!index_.emplace(classes_[i].qualified_name, i).second) {
      throw ConsistencyError("duplicate class '" + classes_[i].qualified_name + "' in release " + release_);
    }
    packages_.add(split_package(classes_[i].package));
  }
}

const ClassInfo* ReleaseCatalog::find(const std::string& qualified_name) const {
  const auto it = index_.find(qualified_name);
  return it == index_.end() ? nullptr : &classes_[it->second];
}

ReleaseCatalog build_catalog(const CodeModel& model, const std::vector<EntityMetricVector>& metrics) {
  std::unordered_map<std::string, double> loc;
  for (const auto& v : metrics) {
    if (v.kind == EntityKind::Class && v.get(Metric::LOC)) loc[v.qualified_name] = *v.get(Metric::LOC);
  }
  std::vector<ClassInfo> classes;
  for (const auto& c : model.classes()) {
    const auto it = loc.find(c.qualified_name);
    if (it == loc.end()) throw ConsistencyError("no LOC for class '" + c.qualified_name + "'");
    classes.push_back({c.qualified_name, c.package_name(), it->second, c.token_bag});
  }
  return ReleaseCatalog(model.release_id(), std::move(classes));
}

std::string catalog_table_string(const std::vector<ReleaseCatalog>& catalogs) {
  std::ostringstream out;
  csv::write_record(out, {"release", "qualified_name", "package", "loc", "tokens"});
  for (const auto& cat : catalogs) {
    for (const auto& c : cat.classes()) {
      std::string tokens;
      for (const auto& [word, count] : c.tokens) {
        if (!tokens.empty()) tokens += ' ';
        tokens += word + ":" + std::to_string(count);
      }
      csv::write_record(out, {cat.release(), c.qualified_name, c.package, csv::format_number(c.loc), tokens});
    }
  }
  return out.str();
}

std::vector<ReleaseCatalog> parse_catalog_table(const std::vector<std::string>& lines, const std::string& source) {
  const std::vector<std::string> header{"release", "qualified_name", "package", "loc", "tokens"};
  if (lines.empty() || csv::split_record(lines[0]) != header) throw SchemaError(source + ": unexpected classes header");
  std::vector<std::pair<std::string, std::vector<ClassInfo>>> groups;
  for (std::size_t r = 1; r < lines.size(); ++r) {
    if (lines[r].empty()) continue;
    const auto cells = csv::split_record(lines[r]);
    if (cells.size() != header.size()) throw ParseError("wrong cell count", source, r + 1);
    const auto loc = csv::parse_number(cells[3]);
    if (!loc) throw ParseError("non-numeric loc '" + cells[3] + "'", source, r + 1, "loc");
    ClassInfo info{cells[1], cells[2], *loc, {}};
    std::istringstream items(cells[4]);
    for (std::string item; items >> item;) {
      const auto colon = item.rfind(':');
      int count = 0;
      if (colon == std::string::npos ||
          std::from_chars(item.data() + colon + 1, item.data() + item.size(), count).ec != std::errc() || count < 0) {
        throw ParseError("malformed token '" + item + "'", source, r + 1, "tokens");
      }
      info.tokens[item.substr(0, colon)] = count;
    }
    if (groups.empty() || groups.back().first != cells[0]) groups.emplace_back(cells[0], std::vector<ClassInfo>{});
    groups.back().second.push_back(std::move(info));
  }
  std::vector<ReleaseCatalog> out;
  for (auto& [release, classes] : groups) out.emplace_back(release, std::move(classes));
  return out;
}

std::vector<ReleaseCatalog> load_catalog_table(const std::string& path) {
  return parse_catalog_table(csv::read_lines(path), path);
}

}  // namespace smellscope
