#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "smellscope/metrics/metric.hpp"

namespace smellscope {

enum class SmellKind { GodClass, DataClass, BrainMethod, ShotgunSurgery, DispersedCoupling, MessageChains };

inline constexpr SmellKind kAllSmellKinds[] = {SmellKind::GodClass,       SmellKind::DataClass,
                                               SmellKind::BrainMethod,    SmellKind::ShotgunSurgery,
                                               SmellKind::DispersedCoupling, SmellKind::MessageChains};

std::string_view smell_name(SmellKind kind) noexcept;
std::optional<SmellKind> parse_smell(std::string_view name) noexcept;
EntityKind smell_granularity(SmellKind kind) noexcept;

enum class Comparison { AtLeast, AtMost };

std::string_view comparison_symbol(Comparison c) noexcept;
bool compare(double actual, Comparison op, double threshold) noexcept;

struct Threshold {
  Comparison op = Comparison::AtLeast;
  double value = 0;
};

// Each strategy is a disjunction of conjunctions over metrics, in printed order.
const std::vector<std::vector<Metric>>& strategy_disjuncts(SmellKind kind);

class ThresholdConfig {
 public:
  // The published default thresholds.
  static ThresholdConfig defaults();
  // Overrides defaults with `{"<Smell>.<METRIC>": {"op": ">=", "value": n}}` entries.
  static ThresholdConfig from_json(std::string_view json_text);
  // An empty path yields the defaults.
  static ThresholdConfig load(const std::string& path);

  const Threshold& at(SmellKind kind, Metric metric) const;
  void set(SmellKind kind, Metric metric, Threshold t);
  const std::map<std::pair<SmellKind, Metric>, Threshold>& entries() const noexcept { return entries_; }

 private:
  std::map<std::pair<SmellKind, Metric>, Threshold> entries_;
};

struct SatisfiedPredicate {
  Metric metric;
  double actual = 0;
  double threshold = 0;
  Comparison op = Comparison::AtLeast;

  friend bool operator==(const SatisfiedPredicate&, const SatisfiedPredicate&) = default;
};

struct SmellInstance {
  SmellKind kind;
  std::string release;
  std::string entity;        // qualified name of the class or method
  std::string owner_class;   // the entity itself for class-level smells
  std::vector<SatisfiedPredicate> satisfied;
  std::optional<double> intensity;

  friend bool operator==(const SmellInstance&, const SmellInstance&) = default;
};

// Predicates of the first satisfied disjunct, or nullopt when the rule does not hold.
// Throws ContractViolation on a granularity mismatch and IncompleteVectorError when a
// referenced metric is missing.
std::optional<std::vector<SatisfiedPredicate>> evaluate_strategy(SmellKind kind, const EntityMetricVector& v,
                                                                 const ThresholdConfig& t);

std::vector<SmellInstance> detect_smells(const std::vector<EntityMetricVector>& release, const ThresholdConfig& t);

}  // namespace smellscope
