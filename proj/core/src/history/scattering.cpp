#include "smellscope/history/scattering.hpp"

#include <algorithm>
#include <cmath>

#include "smellscope/common/error.hpp"

namespace smellscope {

namespace {

const ClassInfo& known(const ReleaseCatalog& catalog, const std::string& cls) {
  const auto* info = catalog.find(cls);
  if (!info) throw ConsistencyError("class '" + cls + "' not in release " + catalog.release());
  return *info;
}

template <typename F>
double mean_over_pairs(const std::set<std::string>& changed, F&& f) {
  const std::vector<std::string> items(changed.begin(), changed.end());
  double sum = 0;
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < items.size(); ++i) {
    for (std::size_t j = i + 1; j < items.size(); ++j) {
      sum += f(items[i], items[j]);
      ++pairs;
    }
  }
  return sum / static_cast<double>(pairs);
}

}  // namespace

int package_distance(const std::string& c1, const std::string& c2, const ReleaseCatalog& catalog) {
  return PackageTree::distance(split_package(known(catalog, c1).package), split_package(known(catalog, c2).package));
}

double cosine_similarity(const std::map<std::string, double>& a, const std::map<std::string, double>& b) {
  double dot = 0, na = 0, nb = 0;
  for (const auto& [t, w] : a) {
    na += w * w;
    if (auto it = b.find(t); it != b.end()) dot += w * it->second;
  }
  for (const auto& [t, w] : b) nb += w * w;
  if (na == 0 || nb == 0) return 0;
  return std::clamp(dot / (std::sqrt(na) * std::sqrt(nb)), 0.0, 1.0);
}

TextualIndex::TextualIndex(const ReleaseCatalog& catalog, bool use_idf) {
  std::map<std::string, int> df;
  for (const auto& c : catalog.classes()) {
    for (const auto& [t, n] : c.tokens) {
      if (n > 0) ++df[t];
    }
  }
  const double n_docs = static_cast<double>(catalog.classes().size());
  for (const auto& c : catalog.classes()) {
    auto& vec = vectors_[c.qualified_name];
    for (const auto& [t, n] : c.tokens) {
      if (n <= 0) continue;
      const double idf = use_idf ? std::log((1 + n_docs) / (1 + df[t])) + 1 : 1.0;
      vec[t] = n * idf;
    }
  }
}

const std::map<std::string, double>& TextualIndex::vector(const std::string& cls) const {
  const auto it = vectors_.find(cls);
  if (it == vectors_.end()) throw ConsistencyError("class '" + cls + "' has no token vector");
  return it->second;
}

double TextualIndex::similarity(const std::string& c1, const std::string& c2) const {
  return cosine_similarity(vector(c1), vector(c2));
}

double textual_similarity(const std::string& c1, const std::string& c2, const TextualIndex& index) {
  return index.similarity(c1, c2);
}

double structural_scattering(const std::set<std::string>& changed, const ReleaseCatalog& catalog) {
  if (changed.size() < 2) return 0;
  const double mean = mean_over_pairs(
      changed, [&](const std::string& a, const std::string& b) { return package_distance(a, b, catalog); });
  return static_cast<double>(changed.size()) * mean;
}

double semantic_scattering(const std::set<std::string>& changed, const TextualIndex& index) {
  if (changed.size() < 2) return 0;
  const double mean =
      mean_over_pairs(changed, [&](const std::string& a, const std::string& b) { return index.similarity(a, b); });
  return static_cast<double>(changed.size()) / std::max(mean, kSimilarityFloor);
}

std::map<std::string, std::set<std::string>> developer_change_sets(const ChangeHistory& h,
                                                                   const ReleaseCatalog& catalog) {
  std::map<std::string, std::set<std::string>> out;
  for (const auto& c : h.commits) {
    for (const auto& t : c.touched) {
      if (catalog.contains(t.class_name)) out[c.author].insert(t.class_name);
    }
  }
  return out;
}

ScatteringFeatures scattering_predictors(const std::string& cls, const ChangeHistory& h, const ReleaseCatalog& catalog,
                                         const TextualIndex& index) {
  ScatteringFeatures f;
  for (const auto& [dev, changed] : developer_change_sets(h, catalog)) {
    if (!changed.count(cls)) continue;
    f.str_scat_pred += structural_scattering(changed, catalog);
    f.sem_scat_pred += semantic_scattering(changed, index);
  }
  return f;
}

std::map<std::string, ScatteringFeatures> all_scattering_predictors(const ChangeHistory& h,
                                                                   const ReleaseCatalog& catalog,
                                                                   const TextualIndex& index) {
  std::map<std::string, ScatteringFeatures> out;
  for (const auto& c : catalog.classes()) out[c.qualified_name];
  for (const auto& [dev, changed] : developer_change_sets(h, catalog)) {
    const double str = structural_scattering(changed, catalog);
    const double sem = semantic_scattering(changed, index);
    for (const auto& cls : changed) {
      out[cls].str_scat_pred += str;
      out[cls].sem_scat_pred += sem;
    }
  }
  return out;
}

}  // namespace smellscope
