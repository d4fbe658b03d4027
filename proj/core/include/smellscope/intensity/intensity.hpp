#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "smellscope/metrics/metric.hpp"
#include "smellscope/smells/detector.hpp"

namespace smellscope {

class MetricDistribution {
 public:
  // Throws ContractViolation when `values` is empty or contains NaN.
  MetricDistribution(Metric metric, std::vector<double> values);

  Metric metric() const noexcept { return metric_; }
  const std::vector<double>& values() const noexcept { return values_; }
  double min() const noexcept { return values_.front(); }
  double max() const noexcept { return values_.back(); }

 private:
  Metric metric_;
  std::vector<double> values_;
};

// Distributions are kept per entity kind: method metrics are compared with methods only.
using DistributionKey = std::pair<EntityKind, Metric>;
using DistributionSet = std::map<DistributionKey, MetricDistribution>;

DistributionSet build_distributions(const std::vector<EntityMetricVector>& release);

enum class PlacementMode { Linear, RankPercentile };
enum class IntensityScale { OneToTen, ZeroToTen };

struct IntensityOptions {
  PlacementMode placement = PlacementMode::Linear;
  IntensityScale scale = IntensityScale::OneToTen;
};

double exceeding_placement(double actual, double threshold, Comparison op, const MetricDistribution& dist,
                           PlacementMode mode = PlacementMode::Linear);

double normalize_exceed(double placement, IntensityScale scale = IntensityScale::OneToTen);

double instance_intensity(const SmellInstance& instance, const DistributionSet& dists,
                          const IntensityOptions& options = {});

struct ClassIntensity {
  std::string release;
  std::string class_name;
  double value = 0;
  std::set<SmellKind> kinds;

  friend bool operator==(const ClassIntensity&, const ClassIntensity&) = default;
};

// Every instance must be owned by `class_name`.
ClassIntensity class_intensity(const std::string& class_name, const std::vector<SmellInstance>& instances,
                               const DistributionSet& dists, const IntensityOptions& options = {});

// One entry per class vector of the release, in input order; non-smelly classes get 0.
// Fills SmellInstance::intensity on the given instances.
std::vector<ClassIntensity> release_intensities(const std::vector<EntityMetricVector>& release,
                                                std::vector<SmellInstance>& instances,
                                                const IntensityOptions& options = {});

// intensity.csv: release,qualified_name,intensity,smell_kinds
std::string intensity_table_string(const std::vector<ClassIntensity>& rows);
std::vector<ClassIntensity> parse_intensity_table(const std::vector<std::string>& lines,
                                                  const std::string& source = {});
std::vector<ClassIntensity> load_intensity_table(const std::string& path);

}  // namespace smellscope
