#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "smellscope/history/change_log.hpp"

namespace smellscope {

// Turns one file touch into a number of changes. The default counts changed lines;
// a statement-level differ can be plugged in instead.
class ChangeCounter {
 public:
  virtual ~ChangeCounter() = default;
  virtual std::int64_t count(const FileTouch& touch) const = 0;
};

class LineDeltaCounter final : public ChangeCounter {
 public:
  std::int64_t count(const FileTouch& touch) const override { return touch.added + touch.deleted; }
};

const ChangeCounter& default_counter();

std::int64_t count_changes(const ChangeHistory& h, const std::string& cls,
                           const ChangeCounter& counter = default_counter());

// Counts for every class touched in the window.
std::map<std::string, std::int64_t> change_counts(const ChangeHistory& h,
                                                  const ChangeCounter& counter = default_counter());

// Middle value, or mean of the two middle values. Throws ContractViolation when empty.
double median(std::vector<double> values);

struct ChangePronenessLabel {
  std::string class_name;
  std::int64_t change_count = 0;
  bool label = false;

  friend bool operator==(const ChangePronenessLabel&, const ChangePronenessLabel&) = default;
};

// label = count > median over all classes; output follows the map order.
std::vector<ChangePronenessLabel> label_change_proneness(const std::map<std::string, std::int64_t>& counts);

// Normalized Shannon entropy of per-class change counts; 0 with fewer than two changed classes.
double change_entropy(const ChangeHistory& h, const ChangeCounter& counter = default_counter());

inline constexpr std::array<std::string_view, 15> kEvolutionFeatureNames = {
    "BOC", "FCH", "FRCH", "LCH", "WCD", "WFR", "TACH", "ATAF", "CHD", "LCA", "LCD", "CSB", "CSBS", "ACDF", "CHO"};

struct EvolutionFeatures {
  std::array<double, 15> values{};  // ordered as kEvolutionFeatureNames

  double get(std::string_view name) const;
  void set(std::string_view name, double value);

  friend bool operator==(const EvolutionFeatures&, const EvolutionFeatures&) = default;
};

// windows[w - 1] is the window ending at release w and presence[w - 1] the classes of
// release w, for w = 1..R. `loc` is the class size at release R.
EvolutionFeatures compute_evolution_metrics(const std::vector<ChangeHistory>& windows,
                                            const std::vector<std::set<std::string>>& presence,
                                            const std::string& cls, double loc);

struct SmellTimelinePoint {
  bool smelly = false;
  int smell_count = 0;
};

enum class RunLengthMode { Longest, MostRecent };

struct AntipatternFeatures {
  double ana = 0;
  double acm = 0;
  int arl = 0;

  friend bool operator==(const AntipatternFeatures&, const AntipatternFeatures&) = default;
};

// timeline[w - 1] describes the class at release w; the current release is windows.size().
AntipatternFeatures antipattern_metrics(const std::string& cls, const std::vector<SmellTimelinePoint>& timeline,
                                        const std::vector<ChangeHistory>& windows,
                                        RunLengthMode mode = RunLengthMode::Longest,
                                        const ChangeCounter& counter = default_counter());

}  // namespace smellscope
