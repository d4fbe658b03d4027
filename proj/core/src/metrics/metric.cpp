#include "smellscope/metrics/metric.hpp"

namespace smellscope {

namespace {

constexpr std::array<std::string_view, kMetricCount> kNames = {
    "ATFD",  "ATLD",       "CC",    "CDISP", "CINT", "CM",      "CYCLO", "FANOUT", "LOC",
    "LOCNAMM", "MaMCL",    "MAXNESTING", "MeMCL", "NMCS", "NOAM", "NOLV", "NOMNAMM", "NOPA",
    "TCC",   "WMCNAMM",    "WOC",   "CBO",   "RFC",  "DIT",     "LCOM",
};

}  // namespace

std::string_view metric_name(Metric m) noexcept { return kNames[static_cast<std::size_t>(m)]; }

std::optional<Metric> parse_metric(std::string_view name) noexcept {
  for (std::size_t i = 0; i < kMetricCount; ++i) {
    if (kNames[i] == name) return static_cast<Metric>(i);
  }
  return std::nullopt;
}

bool is_ratio_metric(Metric m) noexcept {
  return m == Metric::TCC || m == Metric::WOC || m == Metric::CDISP;
}

std::string_view entity_kind_name(EntityKind k) noexcept {
  return k == EntityKind::Class ? "class" : "method";
}

std::optional<EntityKind> parse_entity_kind(std::string_view name) noexcept {
  if (name == "class") return EntityKind::Class;
  if (name == "method") return EntityKind::Method;
  return std::nullopt;
}

bool is_applicable(EntityKind kind, Metric m) noexcept {
  switch (m) {
    case Metric::ATFD:
    case Metric::LOC:
      return true;
    case Metric::LOCNAMM:
    case Metric::NOAM:
    case Metric::NOMNAMM:
    case Metric::NOPA:
    case Metric::TCC:
    case Metric::WMCNAMM:
    case Metric::WOC:
    case Metric::CBO:
    case Metric::RFC:
    case Metric::DIT:
    case Metric::LCOM:
      return kind == EntityKind::Class;
    default:
      return kind == EntityKind::Method;
  }
}

std::string EntityMetricVector::owner_class() const {
  if (kind == EntityKind::Class) return qualified_name;
  const auto hash = qualified_name.find('#');
  return hash == std::string::npos ? qualified_name : qualified_name.substr(0, hash);
}

}  // namespace smellscope
