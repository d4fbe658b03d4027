#include "smellscope/dataset/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>
#include <sstream>

#include "smellscope/common/csv.hpp"
#include "smellscope/common/error.hpp"

namespace smellscope {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string augmentation_name(Augmentation a) {
  switch (a) {
    case Augmentation::None: return "none";
    case Augmentation::Intensity: return "intensity";
    case Augmentation::Antipattern: return "antipattern";
    case Augmentation::IntensityAntipattern: return "intensity+antipattern";
  }
  return "none";
}

std::string row_key(const FeatureRow& r) { return r.release + "/" + r.class_name; }

bool same_values(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!(a[i] == b[i]) && !(std::isnan(a[i]) && std::isnan(b[i]))) return false;
  }
  return true;
}

void drop_feature(Dataset& d, std::size_t j) {
  d.features.erase(d.features.begin() + static_cast<std::ptrdiff_t>(j));
  for (auto& r : d.rows) r.values.erase(r.values.begin() + static_cast<std::ptrdiff_t>(j));
}

bool clean_pass(Dataset& d) {
  bool changed = false;

  std::vector<FeatureRow> kept;
  for (auto& r : d.rows) {
    const auto missing = std::find_if(r.values.begin(), r.values.end(), [](double v) { return std::isnan(v); });
    if (missing != r.values.end()) {
      d.provenance.push_back("removed row " + row_key(r) + ": missing " +
                             d.features[static_cast<std::size_t>(missing - r.values.begin())]);
      changed = true;
    } else {
      kept.push_back(std::move(r));
    }
  }
  d.rows = std::move(kept);
  if (d.rows.empty()) return changed;

  for (std::size_t j = d.features.size(); j-- > 0;) {
    const double first = d.rows.front().values[j];
    const bool constant = std::all_of(d.rows.begin(), d.rows.end(), [&](const FeatureRow& r) { return r.values[j] == first; });
    if (constant) {
      d.provenance.push_back("removed feature " + d.features[j] + ": constant");
      drop_feature(d, j);
      changed = true;
    }
  }

  for (std::size_t j = 0; j < d.features.size(); ++j) {
    for (std::size_t k = d.features.size(); k-- > j + 1;) {
      const bool same = std::all_of(d.rows.begin(), d.rows.end(),
                                    [&](const FeatureRow& r) { return r.values[j] == r.values[k]; });
      if (same) {
        d.provenance.push_back("removed feature " + d.features[k] + ": duplicate of " + d.features[j]);
        drop_feature(d, k);
        changed = true;
      }
    }
  }

  std::map<std::vector<double>, std::set<bool>> labels_by_vector;
  for (const auto& r : d.rows) labels_by_vector[r.values].insert(r.label);
  kept.clear();
  std::map<std::vector<double>, std::string> first_seen;
  for (auto& r : d.rows) {
    if (labels_by_vector[r.values].size() > 1) {
      d.provenance.push_back("removed row " + row_key(r) + ": conflicting labels");
      changed = true;
      continue;
    }
    auto [it, fresh] = first_seen.emplace(r.values, row_key(r));
    if (!fresh) {
      d.provenance.push_back("removed row " + row_key(r) + ": duplicate of " + it->second);
      changed = true;
      continue;
    }
    kept.push_back(std::move(r));
  }
  d.rows = std::move(kept);
  return changed;
}

}  // namespace

std::string_view base_name(BaseModel base) noexcept {
  switch (base) {
    case BaseModel::SM: return "SM";
    case BaseModel::PM: return "PM";
    case BaseModel::DCBM: return "DCBM";
    case BaseModel::COMBINED: return "COMBINED";
  }
  return "";
}

std::vector<std::string> base_features(BaseModel base) {
  switch (base) {
    case BaseModel::SM: return {"CBO", "RFC", "DIT", "LCOM", "LOC"};
    case BaseModel::PM: return {kEvolutionFeatureNames.begin(), kEvolutionFeatureNames.end()};
    case BaseModel::DCBM: return {"str_scat_pred", "sem_scat_pred"};
    case BaseModel::COMBINED:
      return {"CBO", "RFC", "DIT", "LCOM", "LOC", "BOC", "FRCH", "WCD", "TACH", "LCA", "CSB", "CHO",
              "str_scat_pred", "sem_scat_pred", "intensity", "ANA", "ACM", "ARL"};
  }
  return {};
}

std::string ModelSpec::name() const { return std::string(base_name(base)) + "+" + augmentation_name(augmentation); }

ModelSpec ModelSpec::parse(std::string_view text) {
  std::vector<std::string> parts;
  std::string current;
  for (char c : text) {
    if (c == '+') {
      parts.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  parts.push_back(current);

  ModelSpec spec;
  bool found = false;
  for (auto b : {BaseModel::SM, BaseModel::PM, BaseModel::DCBM, BaseModel::COMBINED}) {
    if (parts[0] == base_name(b)) {
      spec.base = b;
      found = true;
    }
  }
  if (!found) throw SchemaError("unknown model base '" + parts[0] + "'");
  bool intensity = false, antipattern = false, none = false;
  for (std::size_t i = 1; i < parts.size(); ++i) {
    bool* flag = parts[i] == "intensity" ? &intensity : parts[i] == "antipattern" ? &antipattern
                                                    : parts[i] == "none"          ? &none
                                                                                  : nullptr;
    if (!flag || *flag) throw SchemaError("invalid model spec '" + std::string(text) + "'");
    *flag = true;
  }
  if (none && (intensity || antipattern)) throw SchemaError("invalid model spec '" + std::string(text) + "'");
  spec.augmentation = intensity && antipattern ? Augmentation::IntensityAntipattern
                      : intensity              ? Augmentation::Intensity
                      : antipattern            ? Augmentation::Antipattern
                                               : Augmentation::None;
  if (spec.base == BaseModel::COMBINED && spec.augmentation != Augmentation::None) {
    throw SchemaError("the combined model already includes intensity and antipattern features");
  }
  return spec;
}

std::vector<std::string> ModelSpec::features() const {
  auto out = base_features(base);
  if (augmentation == Augmentation::Intensity || augmentation == Augmentation::IntensityAntipattern) {
    out.emplace_back("intensity");
  }
  if (augmentation == Augmentation::Antipattern || augmentation == Augmentation::IntensityAntipattern) {
    for (const char* f : {"ANA", "ACM", "ARL"}) out.emplace_back(f);
  }
  return out;
}

std::size_t Dataset::feature_index(const std::string& name) const {
  const auto it = std::find(features.begin(), features.end(), name);
  if (it == features.end()) throw ContractViolation("dataset has no feature '" + name + "'");
  return static_cast<std::size_t>(it - features.begin());
}

std::size_t Dataset::positives() const {
  return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const FeatureRow& r) { return r.label; }));
}

bool operator==(const Dataset& a, const Dataset& b) {
  if (!(a.spec == b.spec) || a.features != b.features || a.provenance != b.provenance ||
      a.rows.size() != b.rows.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    const auto& x = a.rows[i];
    const auto& y = b.rows[i];
    if (x.release != y.release || x.class_name != y.class_name || x.is_smelly != y.is_smelly || x.label != y.label ||
        !same_values(x.values, y.values)) {
      return false;
    }
  }
  return true;
}

Dataset assemble_dataset(const ModelSpec& spec, const AssemblyInputs& inputs) {
  using Key = std::pair<std::string, std::string>;
  std::map<Key, const EntityMetricVector*> metrics;
  std::map<Key, const ClassIntensity*> intensities;
  std::map<Key, const HistoryFeatureRow*> history;
  std::vector<Key> order;
  for (const auto& v : inputs.metrics) {
    if (v.kind != EntityKind::Class) continue;
    if (metrics.emplace(Key{v.release, v.qualified_name}, &v).second) order.emplace_back(v.release, v.qualified_name);
  }
  for (const auto& i : inputs.intensities) intensities.emplace(Key{i.release, i.class_name}, &i);
  for (const auto& h : inputs.history) history.emplace(Key{h.release, h.class_name}, &h);

  std::set<Key> all;
  for (const auto& [k, _] : metrics) all.insert(k);
  for (const auto& [k, _] : intensities) all.insert(k);
  for (const auto& [k, _] : history) all.insert(k);
  std::vector<std::string> orphans;
  for (const auto& k : all) {
    if (!metrics.count(k) || !intensities.count(k) || !history.count(k)) orphans.push_back(k.first + "/" + k.second);
  }
  if (!orphans.empty()) throw JoinError(orphans);

  Dataset d;
  d.spec = spec;
  d.features = spec.features();
  for (const auto& key : order) {
    const auto& v = *metrics.at(key);
    const auto& in = *intensities.at(key);
    const auto& h = *history.at(key);
    FeatureRow row{key.first, key.second, {}, !in.kinds.empty(), h.label};
    for (const auto& f : d.features) {
      if (f == "intensity") {
        row.values.push_back(in.value);
      } else if (const auto m = parse_metric(f)) {
        row.values.push_back(v.get(*m).value_or(kNaN));
      } else {
        row.values.push_back(h.feature(f));
      }
    }
    d.rows.push_back(std::move(row));
  }
  return d;
}

Dataset clean_dataset(const Dataset& input) {
  Dataset d = input;
  while (clean_pass(d)) {
    if (d.rows.empty()) break;
  }
  if (d.rows.empty()) throw EmptyDatasetError("cleaning removed every row of " + d.spec.name());
  if (d.features.empty()) throw EmptyDatasetError("cleaning removed every feature of " + d.spec.name());
  return d;
}

std::string dataset_string(const Dataset& d) {
  std::ostringstream out;
  out << "# spec=" << d.spec.name() << '\n';
  for (const auto& p : d.provenance) out << "# provenance: " << p << '\n';
  std::vector<std::string> header{"release", "class"};
  header.insert(header.end(), d.features.begin(), d.features.end());
  header.emplace_back("is_smelly");
  header.emplace_back("label");
  csv::write_record(out, header);
  for (const auto& r : d.rows) {
    std::vector<std::string> cells{r.release, r.class_name};
    for (double v : r.values) cells.push_back(std::isnan(v) ? std::string() : csv::format_number(v));
    cells.emplace_back(r.is_smelly ? "1" : "0");
    cells.emplace_back(r.label ? "1" : "0");
    csv::write_record(out, cells);
  }
  return out.str();
}

void write_dataset(const Dataset& d, const std::string& path) { csv::write_file_atomic(path, dataset_string(d)); }

Dataset parse_dataset(const std::vector<std::string>& lines, const std::string& source) {
  if (lines.empty() || (lines.size() == 1 && lines[0].empty())) throw EmptyDatasetError(source + ": empty dataset file");
  constexpr std::string_view kSpec = "# spec=";
  constexpr std::string_view kProv = "# provenance: ";
  if (lines[0].rfind(kSpec, 0) != 0) throw ParseError("missing spec comment", source, 1);
  Dataset d;
  d.spec = ModelSpec::parse(std::string_view(lines[0]).substr(kSpec.size()));
  std::size_t r = 1;
  for (; r < lines.size() && lines[r].rfind(kProv, 0) == 0; ++r) d.provenance.push_back(lines[r].substr(kProv.size()));
  if (r >= lines.size()) throw EmptyDatasetError(source + ": missing header");
  const auto header = csv::split_record(lines[r]);
  if (header.size() < 4 || header[0] != "release" || header[1] != "class" || header[header.size() - 2] != "is_smelly" ||
      header.back() != "label") {
    throw SchemaError(source + ": malformed dataset header");
  }
  const auto allowed = d.spec.features();
  for (std::size_t j = 2; j + 2 < header.size(); ++j) {
    if (std::find(allowed.begin(), allowed.end(), header[j]) == allowed.end()) {
      throw SchemaError(source + ": feature '" + header[j] + "' is not part of " + d.spec.name());
    }
    if (std::find(d.features.begin(), d.features.end(), header[j]) != d.features.end()) {
      throw SchemaError(source + ": duplicate feature '" + header[j] + "'");
    }
    d.features.push_back(header[j]);
  }
  for (++r; r < lines.size(); ++r) {
    if (lines[r].empty()) continue;
    const std::size_t row_no = r + 1;
    const auto cells = csv::split_record(lines[r]);
    if (cells.size() != header.size()) throw ParseError("wrong cell count", source, row_no);
    FeatureRow row{cells[0], cells[1], {}, false, false};
    for (std::size_t j = 2; j + 2 < cells.size(); ++j) {
      if (cells[j].empty()) {
        row.values.push_back(kNaN);
        continue;
      }
      const auto v = csv::parse_number(cells[j]);
      if (!v) throw ParseError("non-numeric value '" + cells[j] + "'", source, row_no, header[j]);
      row.values.push_back(*v);
    }
    for (std::size_t j : {cells.size() - 2, cells.size() - 1}) {
      if (cells[j] != "0" && cells[j] != "1") throw ParseError("expected 0 or 1", source, row_no, header[j]);
    }
    row.is_smelly = cells[cells.size() - 2] == "1";
    row.label = cells.back() == "1";
    d.rows.push_back(std::move(row));
  }
  if (d.rows.empty()) throw EmptyDatasetError(source + ": dataset has no rows");
  return d;
}

Dataset read_dataset(const std::string& path) { return parse_dataset(csv::read_lines(path), path); }

}  // namespace smellscope
