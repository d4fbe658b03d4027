#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "smellscope/metrics/metric.hpp"

namespace smellscope {

struct MetricsTable {
  // release id -> vectors in file order
  std::map<std::string, std::vector<EntityMetricVector>> releases;
  std::vector<std::string> warnings;
};

// Column names of the metrics CSV, in order.
std::vector<std::string> metrics_columns();

void write_metrics_table(std::ostream& out, const std::vector<EntityMetricVector>& vectors);
std::string metrics_table_string(const std::vector<EntityMetricVector>& vectors);

// Throws SchemaError for unknown/missing columns and ParseError (with row and column)
// for malformed cells. Rows are numbered from 1 with the header as row 1.
MetricsTable parse_metrics_table(const std::vector<std::string>& lines, const std::string& source = {});
MetricsTable load_metrics_table(const std::string& path);

}  // namespace smellscope
