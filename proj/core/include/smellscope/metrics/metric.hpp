#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace smellscope {

// Structural metrics used by the detection strategies plus the CK-style features
// of the structural baseline. Order matches the metrics CSV column order.
enum class Metric : std::uint8_t {
  ATFD,
  ATLD,
  CC,
  CDISP,
  CINT,
  CM,
  CYCLO,
  FANOUT,
  LOC,
  LOCNAMM,
  MaMCL,
  MAXNESTING,
  MeMCL,
  NMCS,
  NOAM,
  NOLV,
  NOMNAMM,
  NOPA,
  TCC,
  WMCNAMM,
  WOC,
  CBO,
  RFC,
  DIT,
  LCOM,
};

inline constexpr std::size_t kMetricCount = 25;

inline constexpr std::array<Metric, kMetricCount> kAllMetrics = {
    Metric::ATFD,  Metric::ATLD,       Metric::CC,    Metric::CDISP,   Metric::CINT,
    Metric::CM,    Metric::CYCLO,      Metric::FANOUT, Metric::LOC,    Metric::LOCNAMM,
    Metric::MaMCL, Metric::MAXNESTING, Metric::MeMCL, Metric::NMCS,    Metric::NOAM,
    Metric::NOLV,  Metric::NOMNAMM,    Metric::NOPA,  Metric::TCC,     Metric::WMCNAMM,
    Metric::WOC,   Metric::CBO,        Metric::RFC,   Metric::DIT,     Metric::LCOM,
};

std::string_view metric_name(Metric m) noexcept;
std::optional<Metric> parse_metric(std::string_view name) noexcept;

// Metrics whose value is a ratio in [0,1].
bool is_ratio_metric(Metric m) noexcept;

enum class EntityKind : std::uint8_t { Class, Method };

std::string_view entity_kind_name(EntityKind k) noexcept;
std::optional<EntityKind> parse_entity_kind(std::string_view name) noexcept;

bool is_applicable(EntityKind kind, Metric m) noexcept;

// One row of the metrics table. Slots not applicable to the entity kind stay empty.
struct EntityMetricVector {
  std::string release;
  EntityKind kind = EntityKind::Class;
  // Classes: "pkg.Outer.Inner". Methods: "<class>#<name>(<param types>)".
  std::string qualified_name;
  std::string package;
  std::array<std::optional<double>, kMetricCount> values{};

  std::optional<double> get(Metric m) const noexcept {
    return values[static_cast<std::size_t>(m)];
  }
  void set(Metric m, double v) noexcept { values[static_cast<std::size_t>(m)] = v; }

  // For methods, the class part of the qualified name; for classes, the name itself.
  std::string owner_class() const;

  friend bool operator==(const EntityMetricVector&, const EntityMetricVector&) = default;
};

}  // namespace smellscope
