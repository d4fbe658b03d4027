#include "smellscope/smells/smells_table.hpp"

#include <sstream>

#include "smellscope/common/csv.hpp"
#include "smellscope/common/error.hpp"

namespace smellscope {

namespace {

const std::vector<std::string> kColumns{"release", "kind", "entity", "owner_class", "predicates"};

std::string encode(const std::vector<SatisfiedPredicate>& preds) {
  std::string out;
  for (const auto& p : preds) {
    if (!out.empty()) out += ';';
    out += std::string(metric_name(p.metric)) + std::string(comparison_symbol(p.op)) + csv::format_number(p.threshold) +
           "@" + csv::format_number(p.actual);
  }
  return out;
}

SatisfiedPredicate decode(const std::string& item, const std::string& source, std::size_t row) {
  auto op_pos = item.find(">=");
  Comparison op = Comparison::AtLeast;
  if (op_pos == std::string::npos) {
    op_pos = item.find("<=");
    op = Comparison::AtMost;
  }
  const auto at = item.find('@');
  if (op_pos == std::string::npos || at == std::string::npos || at < op_pos) {
    throw ParseError("malformed predicate '" + item + "'", source, row, "predicates");
  }
  const auto metric = parse_metric(item.substr(0, op_pos));
  const auto threshold = csv::parse_number(item.substr(op_pos + 2, at - op_pos - 2));
  const auto actual = csv::parse_number(item.substr(at + 1));
  if (!metric || !threshold || !actual) throw ParseError("malformed predicate '" + item + "'", source, row, "predicates");
  return {*metric, *actual, *threshold, op};
}

}  // namespace

std::string smells_table_string(const std::vector<SmellInstance>& instances) {
  std::ostringstream out;
  csv::write_record(out, kColumns);
  for (const auto& s : instances) {
    csv::write_record(out, {s.release, std::string(smell_name(s.kind)), s.entity, s.owner_class, encode(s.satisfied)});
  }
  return out.str();
}

std::vector<SmellInstance> parse_smells_table(const std::vector<std::string>& lines, const std::string& source) {
  if (lines.empty() || csv::split_record(lines[0]) != kColumns) throw SchemaError(source + ": unexpected smells header");
  std::vector<SmellInstance> out;
  for (std::size_t r = 1; r < lines.size(); ++r) {
    if (lines[r].empty()) continue;
    const auto cells = csv::split_record(lines[r]);
    if (cells.size() != kColumns.size()) throw ParseError("wrong cell count", source, r + 1);
    const auto kind = parse_smell(cells[1]);
    if (!kind) throw ParseError("unknown smell kind '" + cells[1] + "'", source, r + 1, "kind");
    SmellInstance s{*kind, cells[0], cells[2], cells[3], {}, std::nullopt};
    std::stringstream items(cells[4]);
    for (std::string item; std::getline(items, item, ';');) {
      if (!item.empty()) s.satisfied.push_back(decode(item, source, r + 1));
    }
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<SmellInstance> load_smells_table(const std::string& path) {
  return parse_smells_table(csv::read_lines(path), path);
}

}  // namespace smellscope
