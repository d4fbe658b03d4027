#include "smellscope/smells/detector.hpp"

#include <cmath>

#include <nlohmann/json.hpp>
#include "smellscope/common/csv.hpp"
#include "smellscope/common/error.hpp"

namespace smellscope {

std::string_view smell_name(SmellKind kind) noexcept {
  switch (kind) {
    case SmellKind::GodClass: return "GodClass";
    case SmellKind::DataClass: return "DataClass";
    case SmellKind::BrainMethod: return "BrainMethod";
    case SmellKind::ShotgunSurgery: return "ShotgunSurgery";
    case SmellKind::DispersedCoupling: return "DispersedCoupling";
    case SmellKind::MessageChains: return "MessageChains";
  }
  return "";
}

std::optional<SmellKind> parse_smell(std::string_view name) noexcept {
  for (auto k : kAllSmellKinds) {
    if (smell_name(k) == name) return k;
  }
  return std::nullopt;
}

EntityKind smell_granularity(SmellKind kind) noexcept {
  return kind == SmellKind::GodClass || kind == SmellKind::DataClass ? EntityKind::Class : EntityKind::Method;
}

std::string_view comparison_symbol(Comparison c) noexcept { return c == Comparison::AtLeast ? ">=" : "<="; }

bool compare(double actual, Comparison op, double threshold) noexcept {
  return op == Comparison::AtLeast ? actual >= threshold : actual <= threshold;
}

const std::vector<std::vector<Metric>>& strategy_disjuncts(SmellKind kind) {
  using M = Metric;
  static const std::map<SmellKind, std::vector<std::vector<Metric>>> rules = {
      {SmellKind::GodClass, {{M::LOCNAMM, M::WMCNAMM, M::NOMNAMM, M::TCC, M::ATFD}}},
      {SmellKind::DataClass, {{M::WMCNAMM, M::WOC, M::NOAM, M::NOPA}}},
      {SmellKind::BrainMethod, {{M::LOC, M::CYCLO, M::MAXNESTING}, {M::NOLV, M::ATLD}}},
      {SmellKind::ShotgunSurgery, {{M::CC, M::CM, M::FANOUT}}},
      {SmellKind::DispersedCoupling, {{M::CINT, M::CDISP}}},
      {SmellKind::MessageChains, {{M::MaMCL}, {M::NMCS, M::MeMCL}}},
  };
  return rules.at(kind);
}

ThresholdConfig ThresholdConfig::defaults() {
  using M = Metric;
  constexpr auto ge = Comparison::AtLeast;
  constexpr auto le = Comparison::AtMost;
  ThresholdConfig c;
  c.entries_ = {
      {{SmellKind::GodClass, M::LOCNAMM}, {ge, 176}},
      {{SmellKind::GodClass, M::WMCNAMM}, {ge, 22}},
      {{SmellKind::GodClass, M::NOMNAMM}, {ge, 18}},
      {{SmellKind::GodClass, M::TCC}, {le, 0.33}},
      {{SmellKind::GodClass, M::ATFD}, {ge, 6}},
      {{SmellKind::DataClass, M::WMCNAMM}, {le, 14}},
      {{SmellKind::DataClass, M::WOC}, {le, 0.33}},
      {{SmellKind::DataClass, M::NOAM}, {ge, 4}},
      {{SmellKind::DataClass, M::NOPA}, {ge, 3}},
      {{SmellKind::BrainMethod, M::LOC}, {ge, 33}},
      {{SmellKind::BrainMethod, M::CYCLO}, {ge, 7}},
      {{SmellKind::BrainMethod, M::MAXNESTING}, {ge, 6}},
      {{SmellKind::BrainMethod, M::NOLV}, {ge, 6}},
      {{SmellKind::BrainMethod, M::ATLD}, {ge, 5}},
      {{SmellKind::ShotgunSurgery, M::CC}, {ge, 5}},
      {{SmellKind::ShotgunSurgery, M::CM}, {ge, 6}},
      {{SmellKind::ShotgunSurgery, M::FANOUT}, {ge, 3}},
      {{SmellKind::DispersedCoupling, M::CINT}, {ge, 8}},
      {{SmellKind::DispersedCoupling, M::CDISP}, {ge, 0.66}},
      {{SmellKind::MessageChains, M::MaMCL}, {ge, 3}},
      {{SmellKind::MessageChains, M::NMCS}, {ge, 3}},
      {{SmellKind::MessageChains, M::MeMCL}, {ge, 2}},
  };
  return c;
}

const Threshold& ThresholdConfig::at(SmellKind kind, Metric metric) const {
  auto it = entries_.find({kind, metric});
  if (it == entries_.end()) {
    throw ConsistencyError("no threshold for " + std::string(smell_name(kind)) + "." + std::string(metric_name(metric)));
  }
  return it->second;
}

void ThresholdConfig::set(SmellKind kind, Metric metric, Threshold t) {
  const std::string key = std::string(smell_name(kind)) + "." + std::string(metric_name(metric));
  if (entries_.find({kind, metric}) == entries_.end()) throw SchemaError("no such predicate " + key);
  if (!std::isfinite(t.value)) throw SchemaError("threshold for " + key + " must be finite");
  if (is_ratio_metric(metric) && (t.value < 0 || t.value > 1)) {
    throw SchemaError("threshold for " + key + " must lie in [0,1]");
  }
  entries_[{kind, metric}] = t;
}

ThresholdConfig ThresholdConfig::from_json(std::string_view json_text) {
  ThresholdConfig c = defaults();
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("threshold config: ") + e.what());
  }
  if (!doc.is_object()) throw SchemaError("threshold config must be a JSON object");
  for (const auto& [key, spec] : doc.items()) {
    const auto dot = key.find('.');
    const auto kind = dot == std::string::npos ? std::nullopt : parse_smell(key.substr(0, dot));
    const auto metric = dot == std::string::npos ? std::nullopt : parse_metric(key.substr(dot + 1));
    if (!kind || !metric || !c.entries_.contains({*kind, *metric})) {
      throw SchemaError("unknown threshold key '" + key + "'");
    }
    if (!spec.is_object() || !spec.contains("value") || !spec["value"].is_number()) {
      throw SchemaError("threshold '" + key + "' needs a numeric \"value\"");
    }
    Threshold t = c.at(*kind, *metric);
    if (spec.contains("op")) {
      const auto op = spec["op"].get<std::string>();
      if (op == ">=") t.op = Comparison::AtLeast;
      else if (op == "<=") t.op = Comparison::AtMost;
      else throw SchemaError("threshold '" + key + "' has unsupported op '" + op + "'");
    }
    t.value = spec["value"].get<double>();
    c.set(*kind, *metric, t);
  }
  return c;
}

ThresholdConfig ThresholdConfig::load(const std::string& path) {
  if (path.empty()) return defaults();
  std::string text;
  for (const auto& line : csv::read_lines(path)) text += line + "\n";
  return from_json(text);
}

std::optional<std::vector<SatisfiedPredicate>> evaluate_strategy(SmellKind kind, const EntityMetricVector& v,
                                                                 const ThresholdConfig& t) {
  if (v.kind != smell_granularity(kind)) {
    throw ContractViolation(std::string(smell_name(kind)) + " cannot be evaluated on a " +
                            std::string(entity_kind_name(v.kind)) + " vector");
  }
  const auto& disjuncts = strategy_disjuncts(kind);
  for (const auto& conj : disjuncts) {
    for (auto m : conj) {
      if (!v.get(m)) throw IncompleteVectorError(v.qualified_name, std::string(metric_name(m)));
    }
  }
  for (const auto& conj : disjuncts) {
    std::vector<SatisfiedPredicate> preds;
    bool holds = true;
    for (auto m : conj) {
      const auto& th = t.at(kind, m);
      const double actual = *v.get(m);
      if (!compare(actual, th.op, th.value)) {
        holds = false;
        break;
      }
      preds.push_back({m, actual, th.value, th.op});
    }
    if (holds) return preds;
  }
  return std::nullopt;
}

std::vector<SmellInstance> detect_smells(const std::vector<EntityMetricVector>& release, const ThresholdConfig& t) {
  if (release.empty()) throw ContractViolation("cannot detect smells in an empty release");
  std::vector<SmellInstance> out;
  for (const auto& v : release) {
    for (auto kind : kAllSmellKinds) {
      if (smell_granularity(kind) != v.kind) continue;
      if (auto preds = evaluate_strategy(kind, v, t)) {
        out.push_back({kind, v.release, v.qualified_name, v.owner_class(), std::move(*preds), std::nullopt});
      }
    }
  }
  return out;
}

}  // namespace smellscope
