#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "smellscope/metrics/code_model.hpp"
#include "smellscope/metrics/metric.hpp"

namespace smellscope {

// Features of the structural (CK-style) baseline model.
struct SmFeatures {
  double cbo = 0;
  double rfc = 0;
  double dit = 0;
  double lcom = 0;
  double loc = 0;
};

// Computes metric vectors over one model. Cross-class indexes (callers, accessors,
// inheritance) are built once at construction.
class MetricCalculator {
 public:
  explicit MetricCalculator(const CodeModel& model);

  // Throws ConsistencyError when the entity is not part of the model.
  EntityMetricVector class_metrics(const ClassEntity& cls) const;
  EntityMetricVector method_metrics(const MethodEntity& method) const;
  SmFeatures sm_features(const ClassEntity& cls) const;

  // Every class followed by its methods, in model order.
  std::vector<EntityMetricVector> release_metrics() const;

 private:
  const ClassEntity& owned_class(const ClassEntity& cls) const;
  const MethodEntity& owned_method(const MethodEntity& method) const;
  std::set<std::string> lineage(const std::string& cls) const;
  // Attributes touched directly or through accessor calls.
  std::set<AttributeRef> touched_attributes(const MethodEntity& m) const;
  std::set<std::string> instance_attributes_closure(const ClassEntity& cls, const MethodEntity& m) const;
  int depth_of_inheritance(const ClassEntity& cls) const;

  const CodeModel& model_;
  std::map<CallTarget, AttributeRef> accessor_fields_;
  std::map<CallTarget, std::set<std::string>> callers_;  // target -> caller method qualified names
};

EntityMetricVector compute_entity_metrics(const CodeModel& model, const ClassEntity& cls);
EntityMetricVector compute_entity_metrics(const CodeModel& model, const MethodEntity& method);
SmFeatures compute_sm_features(const CodeModel& model, const ClassEntity& cls);
std::vector<EntityMetricVector> compute_release_metrics(const CodeModel& model);

}  // namespace smellscope
