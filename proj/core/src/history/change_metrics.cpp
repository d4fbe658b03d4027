#include "smellscope/history/change_metrics.hpp"

#include <algorithm>
#include <cmath>

#include "smellscope/common/error.hpp"

namespace smellscope {

namespace {

std::size_t evolution_slot(std::string_view name) {
  for (std::size_t i = 0; i < kEvolutionFeatureNames.size(); ++i) {
    if (kEvolutionFeatureNames[i] == name) return i;
  }
  throw ContractViolation("unknown evolution feature '" + std::string(name) + "'");
}

struct WindowActivity {
  double commits = 0;
  double lines = 0;
  std::optional<double> last_commit_lines;
};

WindowActivity activity(const ChangeHistory& h, const std::string& cls) {
  WindowActivity a;
  for (const auto& c : h.commits) {
    double lines = 0;
    bool touched = false;
    for (const auto& t : c.touched) {
      if (t.class_name != cls) continue;
      touched = true;
      lines += t.added + t.deleted;
    }
    if (!touched) continue;
    a.commits += 1;
    a.lines += lines;
    a.last_commit_lines = lines;
  }
  return a;
}

}  // namespace

const ChangeCounter& default_counter() {
  static const LineDeltaCounter counter;
  return counter;
}

std::int64_t count_changes(const ChangeHistory& h, const std::string& cls, const ChangeCounter& counter) {
  std::int64_t total = 0;
  for (const auto& c : h.commits) {
    for (const auto& t : c.touched) {
      if (t.class_name == cls) total += counter.count(t);
    }
  }
  return total;
}

std::map<std::string, std::int64_t> change_counts(const ChangeHistory& h, const ChangeCounter& counter) {
  std::map<std::string, std::int64_t> out;
  for (const auto& c : h.commits) {
    for (const auto& t : c.touched) out[t.class_name] += counter.count(t);
  }
  return out;
}

double median(std::vector<double> values) {
  if (values.empty()) throw ContractViolation("median of an empty sample");
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  return n % 2 == 1 ? values[n / 2] : (values[n / 2 - 1] + values[n / 2]) / 2.0;
}

std::vector<ChangePronenessLabel> label_change_proneness(const std::map<std::string, std::int64_t>& counts) {
  if (counts.empty()) throw ContractViolation("cannot label an empty release");
  std::vector<double> values;
  values.reserve(counts.size());
  for (const auto& [cls, n] : counts) values.push_back(static_cast<double>(n));
  const double m = median(values);
  std::vector<ChangePronenessLabel> out;
  out.reserve(counts.size());
  for (const auto& [cls, n] : counts) out.push_back({cls, n, static_cast<double>(n) > m});
  return out;
}

double change_entropy(const ChangeHistory& h, const ChangeCounter& counter) {
  std::vector<double> counts;
  double total = 0;
  for (const auto& [cls, n] : change_counts(h, counter)) {
    if (n <= 0) continue;
    counts.push_back(static_cast<double>(n));
    total += static_cast<double>(n);
  }
  if (counts.size() < 2) return 0;
  double entropy = 0;
  for (double n : counts) {
    const double p = n / total;
    entropy -= p * std::log2(p);
  }
  return std::clamp(entropy / std::log2(static_cast<double>(counts.size())), 0.0, 1.0);
}

double EvolutionFeatures::get(std::string_view name) const { return values[evolution_slot(name)]; }
void EvolutionFeatures::set(std::string_view name, double value) { values[evolution_slot(name)] = value; }

EvolutionFeatures compute_evolution_metrics(const std::vector<ChangeHistory>& windows,
                                            const std::vector<std::set<std::string>>& presence,
                                            const std::string& cls, double loc) {
  if (windows.empty() || windows.size() != presence.size()) {
    throw ContractViolation("evolution metrics need one window per release");
  }
  const std::size_t R = presence.size();
  if (!presence[R - 1].count(cls)) throw ContractViolation("class '" + cls + "' absent at the current release");

  std::size_t boc = R;
  for (std::size_t w = 1; w <= R; ++w) {
    if (presence[w - 1].count(cls)) {
      boc = w;
      break;
    }
  }
  const auto density = [loc](double lines) { return loc > 0 ? lines / loc : 0.0; };

  double fch = 0, lch = 0, wcd = 0, wfr = 0, csb = 0, chd_sum = 0, frch_total = 0, lca = 0;
  WindowActivity current;
  for (std::size_t w = 1; w <= R; ++w) {
    const auto a = activity(windows[w - 1], cls);
    const double weight = std::ldexp(1.0, static_cast<int>(w) - static_cast<int>(R));
    if (a.commits > 0) {
      if (fch == 0) fch = static_cast<double>(w);
      lch = static_cast<double>(w);
      lca = *a.last_commit_lines;
    }
    wcd += density(a.lines) * weight;
    wfr += a.commits * weight;
    chd_sum += density(a.lines);
    frch_total += a.commits;
    if (w > boc) csb += a.lines;
    if (w == R) current = a;
  }

  EvolutionFeatures f;
  f.set("BOC", static_cast<double>(boc));
  f.set("FCH", fch);
  f.set("FRCH", current.commits);
  f.set("LCH", lch);
  f.set("WCD", wcd);
  f.set("WFR", wfr);
  f.set("TACH", current.lines);
  f.set("ATAF", current.commits > 0 ? current.lines / current.commits : 0.0);
  f.set("CHD", density(current.lines));
  f.set("LCA", lca);
  f.set("LCD", density(lca));
  f.set("CSB", csb);
  f.set("CSBS", density(csb));
  f.set("ACDF", frch_total > 0 ? chd_sum / frch_total : 0.0);
  f.set("CHO", current.commits >= 1 ? 1.0 : 0.0);
  return f;
}

AntipatternFeatures antipattern_metrics(const std::string& cls, const std::vector<SmellTimelinePoint>& timeline,
                                        const std::vector<ChangeHistory>& windows, RunLengthMode mode,
                                        const ChangeCounter& counter) {
  if (timeline.size() < windows.size()) {
    throw ConsistencyError("smell timeline of '" + cls + "' covers " + std::to_string(timeline.size()) +
                           " releases but history has " + std::to_string(windows.size()));
  }
  const std::size_t R = windows.empty() ? timeline.size() : windows.size();
  AntipatternFeatures f;
  if (R == 0) return f;

  double previous = 0;
  for (std::size_t w = 1; w < R; ++w) previous += timeline[w - 1].smell_count;
  f.ana = R > 1 ? previous / static_cast<double>(R - 1) : 0.0;

  for (std::size_t w = 1; w <= windows.size(); ++w) {
    if (!timeline[w - 1].smelly) continue;
    const auto counts = change_counts(windows[w - 1], counter);
    const auto own = counts.find(cls);
    if (own == counts.end() || own->second <= 0) continue;
    double total = 0;
    for (const auto& [c, n] : counts) total += static_cast<double>(n);
    f.acm += change_entropy(windows[w - 1], counter) * (static_cast<double>(own->second) / total);
  }

  int run = 0;
  for (std::size_t w = 1; w <= R; ++w) {
    run = timeline[w - 1].smelly ? run + 1 : 0;
    f.arl = mode == RunLengthMode::Longest ? std::max(f.arl, run) : run;
  }
  return f;
}

}  // namespace smellscope
