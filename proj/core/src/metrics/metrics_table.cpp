#include "smellscope/metrics/metrics_table.hpp"

#include <ostream>
#include <sstream>
#include <unordered_map>

#include "smellscope/common/csv.hpp"
#include "smellscope/common/error.hpp"

namespace smellscope {

namespace {
constexpr std::size_t kKeyColumns = 4;  // release, entity_kind, qualified_name, package
}

std::vector<std::string> metrics_columns() {
  std::vector<std::string> cols{"release", "entity_kind", "qualified_name", "package"};
  for (auto m : kAllMetrics) cols.emplace_back(metric_name(m));
  return cols;
}

void write_metrics_table(std::ostream& out, const std::vector<EntityMetricVector>& vectors) {
  csv::write_record(out, metrics_columns());
  for (const auto& v : vectors) {
    std::vector<std::string> row{v.release, std::string(entity_kind_name(v.kind)), v.qualified_name, v.package};
    for (auto m : kAllMetrics) {
      const auto value = v.get(m);
      row.push_back(value ? csv::format_number(*value) : std::string());
    }
    csv::write_record(out, row);
  }
}

std::string metrics_table_string(const std::vector<EntityMetricVector>& vectors) {
  std::ostringstream out;
  write_metrics_table(out, vectors);
  return out.str();
}

MetricsTable parse_metrics_table(const std::vector<std::string>& lines, const std::string& source) {
  if (lines.empty()) throw SchemaError(source + ": missing header row");
  const auto header = csv::split_record(lines[0]);
  const auto expected = metrics_columns();
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < header.size(); ++i) {
    bool known = false;
    for (const auto& e : expected) known = known || e == header[i];
    if (!known) throw SchemaError(source + ": unknown column '" + header[i] + "'");
    if (!index.emplace(header[i], i).second) throw SchemaError(source + ": duplicate column '" + header[i] + "'");
  }
  for (std::size_t i = 0; i < kKeyColumns; ++i) {
    if (!index.count(expected[i])) throw SchemaError(source + ": missing column '" + expected[i] + "'");
  }

  MetricsTable table;
  std::size_t data_rows = 0;
  for (std::size_t r = 1; r < lines.size(); ++r) {
    if (lines[r].empty()) continue;
    const std::size_t row_no = r + 1;
    std::vector<std::string> cells;
    try {
      cells = csv::split_record(lines[r]);
    } catch (const ParseError& e) {
      throw ParseError(e.what(), source, row_no);
    }
    if (cells.size() != header.size()) {
      throw ParseError("expected " + std::to_string(header.size()) + " cells, found " + std::to_string(cells.size()),
                       source, row_no);
    }
    EntityMetricVector v;
    v.release = cells[index["release"]];
    const auto kind = parse_entity_kind(cells[index["entity_kind"]]);
    if (!kind) throw ParseError("invalid entity kind '" + cells[index["entity_kind"]] + "'", source, row_no, "entity_kind");
    v.kind = *kind;
    v.qualified_name = cells[index["qualified_name"]];
    v.package = cells[index["package"]];
    if (v.qualified_name.empty()) throw ParseError("empty qualified name", source, row_no, "qualified_name");
    for (auto m : kAllMetrics) {
      const auto it = index.find(std::string(metric_name(m)));
      if (it == index.end()) continue;
      const std::string& cell = cells[it->second];
      if (cell.empty()) continue;
      const auto value = csv::parse_number(cell);
      if (!value) throw ParseError("non-numeric value '" + cell + "'", source, row_no, std::string(metric_name(m)));
      if (!is_applicable(v.kind, m)) {
        throw ParseError("metric not applicable to " + std::string(entity_kind_name(v.kind)), source, row_no,
                         std::string(metric_name(m)));
      }
      v.set(m, *value);
    }
    table.releases[v.release].push_back(std::move(v));
    ++data_rows;
  }
  if (data_rows == 0) table.warnings.push_back((source.empty() ? std::string("metrics table") : source) + ": no data rows");
  return table;
}

MetricsTable load_metrics_table(const std::string& path) { return parse_metrics_table(csv::read_lines(path), path); }

}  // namespace smellscope
