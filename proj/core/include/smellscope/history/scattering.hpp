#pragma once

#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "smellscope/history/catalog.hpp"
#include "smellscope/history/change_log.hpp"

namespace smellscope {

inline constexpr double kSimilarityFloor = 0.01;

// Edges on the package tree path between the packages of two classes.
int package_distance(const std::string& c1, const std::string& c2, const ReleaseCatalog& catalog);

// Cosine similarity of two weighted token vectors; 0 when either is empty.
double cosine_similarity(const std::map<std::string, double>& a, const std::map<std::string, double>& b);

// Vector space model over one release: tf-idf weights with smoothed idf
// ln((1 + N) / (1 + df)) + 1, or raw term frequency when idf is disabled.
class TextualIndex {
 public:
  explicit TextualIndex(const ReleaseCatalog& catalog, bool use_idf = true);

  // Throws ConsistencyError for classes outside the catalog.
  double similarity(const std::string& c1, const std::string& c2) const;
  const std::map<std::string, double>& vector(const std::string& cls) const;

 private:
  std::unordered_map<std::string, std::map<std::string, double>> vectors_;
};

double textual_similarity(const std::string& c1, const std::string& c2, const TextualIndex& index);

// |CH| times the mean pairwise package distance; 0 for fewer than two classes.
double structural_scattering(const std::set<std::string>& changed, const ReleaseCatalog& catalog);
// |CH| divided by the mean pairwise similarity, floored at kSimilarityFloor; 0 for fewer than two classes.
double semantic_scattering(const std::set<std::string>& changed, const TextualIndex& index);

// Classes of the catalog changed by each developer in the window.
std::map<std::string, std::set<std::string>> developer_change_sets(const ChangeHistory& h,
                                                                   const ReleaseCatalog& catalog);

struct ScatteringFeatures {
  double str_scat_pred = 0;
  double sem_scat_pred = 0;

  friend bool operator==(const ScatteringFeatures&, const ScatteringFeatures&) = default;
};

ScatteringFeatures scattering_predictors(const std::string& cls, const ChangeHistory& h, const ReleaseCatalog& catalog,
                                         const TextualIndex& index);

// Predictors for every catalog class; untouched classes get zeros.
std::map<std::string, ScatteringFeatures> all_scattering_predictors(const ChangeHistory& h,
                                                                   const ReleaseCatalog& catalog,
                                                                   const TextualIndex& index);

}  // namespace smellscope
