#include "smellscope/intensity/intensity.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <unordered_map>

#include "smellscope/common/csv.hpp"
#include "smellscope/common/error.hpp"

namespace smellscope {

MetricDistribution::MetricDistribution(Metric metric, std::vector<double> values)
    : metric_(metric), values_(std::move(values)) {
  if (values_.empty()) throw ContractViolation("empty distribution for " + std::string(metric_name(metric)));
  for (double v : values_) {
    if (std::isnan(v)) throw ContractViolation("NaN in distribution for " + std::string(metric_name(metric)));
  }
  std::sort(values_.begin(), values_.end());
}

DistributionSet build_distributions(const std::vector<EntityMetricVector>& release) {
  std::map<DistributionKey, std::vector<double>> columns;
  for (const auto& v : release) {
    for (auto m : kAllMetrics) {
      if (auto value = v.get(m)) columns[{v.kind, m}].push_back(*value);
    }
  }
  DistributionSet out;
  for (auto& [key, values] : columns) out.emplace(key, MetricDistribution(key.second, std::move(values)));
  return out;
}

double exceeding_placement(double actual, double threshold, Comparison op, const MetricDistribution& dist,
                           PlacementMode mode) {
  if (!compare(actual, op, threshold)) {
    throw ContractViolation("predicate " + std::string(metric_name(dist.metric())) + " not satisfied by " +
                            csv::format_number(actual));
  }
  const bool up = op == Comparison::AtLeast;
  if (mode == PlacementMode::Linear) {
    const double extreme = up ? dist.max() : dist.min();
    const double span = up ? extreme - threshold : threshold - extreme;
    if (!(span > 0)) return 1.0;
    const double p = (up ? actual - threshold : threshold - actual) / span;
    return std::clamp(p, 0.0, 1.0);
  }
  // Rank placement among the observed values that satisfy the predicate.
  std::size_t below_actual = 0;
  std::size_t below_extreme = 0;
  const double extreme = up ? dist.max() : dist.min();
  for (double v : dist.values()) {
    if (!compare(v, op, threshold)) continue;
    if (up ? v < actual : v > actual) ++below_actual;
    if (up ? v < extreme : v > extreme) ++below_extreme;
  }
  if (below_extreme == 0) return 1.0;
  return std::min(1.0, static_cast<double>(below_actual) / static_cast<double>(below_extreme));
}

double normalize_exceed(double placement, IntensityScale scale) {
  if (!(placement >= 0.0 && placement <= 1.0)) {
    throw ContractViolation("placement " + csv::format_number(placement) + " outside [0,1]");
  }
  return scale == IntensityScale::OneToTen ? 1.0 + 9.0 * placement : 10.0 * placement;
}

double instance_intensity(const SmellInstance& instance, const DistributionSet& dists, const IntensityOptions& options) {
  if (instance.satisfied.empty()) throw ContractViolation("smell instance without satisfied predicates: " + instance.entity);
  const EntityKind kind = smell_granularity(instance.kind);
  double sum = 0;
  for (const auto& p : instance.satisfied) {
    const auto it = dists.find({kind, p.metric});
    if (it == dists.end()) {
      throw ConsistencyError("no distribution for " + std::string(entity_kind_name(kind)) + " metric " +
                             std::string(metric_name(p.metric)));
    }
    sum += normalize_exceed(exceeding_placement(p.actual, p.threshold, p.op, it->second, options.placement),
                            options.scale);
  }
  return sum / static_cast<double>(instance.satisfied.size());
}

ClassIntensity class_intensity(const std::string& class_name, const std::vector<SmellInstance>& instances,
                               const DistributionSet& dists, const IntensityOptions& options) {
  ClassIntensity out;
  out.class_name = class_name;
  for (const auto& s : instances) {
    if (s.owner_class != class_name) {
      throw ContractViolation("instance on '" + s.entity + "' does not belong to class '" + class_name + "'");
    }
    out.release = s.release;
    out.value = std::max(out.value, instance_intensity(s, dists, options));
    out.kinds.insert(s.kind);
  }
  return out;
}

std::vector<ClassIntensity> release_intensities(const std::vector<EntityMetricVector>& release,
                                                std::vector<SmellInstance>& instances, const IntensityOptions& options) {
  const auto dists = build_distributions(release);
  std::unordered_map<std::string, std::vector<SmellInstance>> by_class;
  for (auto& s : instances) {
    s.intensity = instance_intensity(s, dists, options);
    by_class[s.owner_class].push_back(s);
  }
  std::vector<ClassIntensity> out;
  for (const auto& v : release) {
    if (v.kind != EntityKind::Class) continue;
    auto ci = class_intensity(v.qualified_name, by_class[v.qualified_name], dists, options);
    ci.release = v.release;
    out.push_back(std::move(ci));
    by_class.erase(v.qualified_name);
  }
  for (const auto& [cls, list] : by_class) {
    if (!list.empty()) throw ConsistencyError("smell instances reference unknown class '" + cls + "'");
  }
  return out;
}

std::string intensity_table_string(const std::vector<ClassIntensity>& rows) {
  std::ostringstream out;
  csv::write_record(out, {"release", "qualified_name", "intensity", "smell_kinds"});
  for (const auto& r : rows) {
    std::string kinds;
    for (auto k : r.kinds) {
      if (!kinds.empty()) kinds += ';';
      kinds += smell_name(k);
    }
    csv::write_record(out, {r.release, r.class_name, csv::format_number(r.value), kinds});
  }
  return out.str();
}

std::vector<ClassIntensity> parse_intensity_table(const std::vector<std::string>& lines, const std::string& source) {
  const std::vector<std::string> header{"release", "qualified_name", "intensity", "smell_kinds"};
  if (lines.empty() || csv::split_record(lines[0]) != header) throw SchemaError(source + ": unexpected intensity header");
  std::vector<ClassIntensity> out;
  for (std::size_t r = 1; r < lines.size(); ++r) {
    if (lines[r].empty()) continue;
    const auto cells = csv::split_record(lines[r]);
    if (cells.size() != header.size()) throw ParseError("wrong cell count", source, r + 1);
    const auto value = csv::parse_number(cells[2]);
    if (!value) throw ParseError("non-numeric value '" + cells[2] + "'", source, r + 1, "intensity");
    ClassIntensity ci{cells[0], cells[1], *value, {}};
    std::stringstream items(cells[3]);
    for (std::string item; std::getline(items, item, ';');) {
      const auto kind = parse_smell(item);
      if (!kind) throw ParseError("unknown smell kind '" + item + "'", source, r + 1, "smell_kinds");
      ci.kinds.insert(*kind);
    }
    out.push_back(std::move(ci));
  }
  return out;
}

std::vector<ClassIntensity> load_intensity_table(const std::string& path) {
  return parse_intensity_table(csv::read_lines(path), path);
}

}  // namespace smellscope
