#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "smellscope/history/history_features.hpp"
#include "smellscope/intensity/intensity.hpp"
#include "smellscope/metrics/metric.hpp"

namespace smellscope {

enum class BaseModel { SM, PM, DCBM, COMBINED };
enum class Augmentation { None, Intensity, Antipattern, IntensityAntipattern };

struct ModelSpec {
  BaseModel base = BaseModel::SM;
  Augmentation augmentation = Augmentation::None;

  // "SM+none", "PM+intensity", "DCBM+intensity+antipattern", ...
  std::string name() const;
  // Accepts the canonical names plus a bare base ("SM") and either augmentation order.
  // Throws SchemaError.
  static ModelSpec parse(std::string_view text);
  // Candidate features in canonical order.
  std::vector<std::string> features() const;

  friend bool operator==(const ModelSpec&, const ModelSpec&) = default;
};

std::string_view base_name(BaseModel base) noexcept;
std::vector<std::string> base_features(BaseModel base);

struct FeatureRow {
  std::string release;
  std::string class_name;
  std::vector<double> values;  // aligned with Dataset::features; NaN when missing
  bool is_smelly = false;
  bool label = false;
};

struct Dataset {
  ModelSpec spec;
  std::vector<std::string> features;
  std::vector<FeatureRow> rows;
  std::vector<std::string> provenance;

  std::size_t feature_index(const std::string& name) const;  // throws ContractViolation
  std::size_t positives() const;
};

bool operator==(const Dataset& a, const Dataset& b);

// Inputs keyed by (release, class); all three must cover the same keys.
struct AssemblyInputs {
  std::vector<EntityMetricVector> metrics;  // method vectors are ignored
  std::vector<ClassIntensity> intensities;
  std::vector<HistoryFeatureRow> history;  // carries the labels
};

// Rows follow the order of the class metric vectors. Throws JoinError listing orphans.
Dataset assemble_dataset(const ModelSpec& spec, const AssemblyInputs& inputs);

// Drops rows with missing values, constant features, duplicate features, conflicting rows
// and duplicate rows, repeating until nothing changes. Throws EmptyDatasetError when no
// rows or no features survive.
Dataset clean_dataset(const Dataset& d);

std::string dataset_string(const Dataset& d);
void write_dataset(const Dataset& d, const std::string& path);
Dataset parse_dataset(const std::vector<std::string>& lines, const std::string& source = {});
Dataset read_dataset(const std::string& path);

}  // namespace smellscope
