#include "smellscope/history/change_log.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <limits>
#include <memory>
#include <sstream>
#include <unordered_map>

#include "smellscope/common/csv.hpp"
#include "smellscope/common/error.hpp"

namespace smellscope {

namespace {

// Howard Hinnant's days_from_civil.
std::int64_t days_from_civil(std::int64_t y, unsigned m, unsigned d) {
  y -= m <= 2;
  const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
  const unsigned yoe = static_cast<unsigned>(y - era * 400);
  const unsigned doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
  const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
  return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

bool read_int(std::string_view s, std::size_t pos, std::size_t len, int& out) {
  if (pos + len > s.size()) return false;
  for (std::size_t i = pos; i < pos + len; ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  std::from_chars(s.data() + pos, s.data() + pos + len, out);
  return true;
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

std::string trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return std::string(s);
}

std::vector<std::string> split(std::string_view line, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= line.size(); ++i) {
    if (i == line.size() || line[i] == sep) {
      out.emplace_back(line.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

std::optional<int> parse_count(const std::string& s) {
  int v = 0;
  const auto t = trim(s);
  if (t.empty()) return std::nullopt;
  auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || p != t.data() + t.size() || v < 0) return std::nullopt;
  return v;
}

std::string run_command(const std::string& cmd) {
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  if (!pipe) throw InputError("cannot run: " + cmd);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe.get())) > 0) out.append(buf.data(), n);
  const int status = pclose(pipe.release());
  if (status != 0) throw InputError("command failed: " + cmd);
  return out;
}

std::string shell_quote(const std::string& s) {
  std::string out = "'";
  for (char c : s) {
    if (c == '\'') out += "'\\''";
    else out += c;
  }
  return out + "'";
}

std::string collapse_slashes(std::string s) {
  std::string out;
  for (char c : s) {
    if (c == '/' && !out.empty() && out.back() == '/') continue;
    out += c;
  }
  if (!out.empty() && out.front() == '/') out.erase(0, 1);
  return out;
}

// git numstat rename forms: "old => new" and "pre/{old => new}/post".
std::pair<std::string, std::string> split_rename(const std::string& spec) {
  const auto open = spec.find('{');
  const auto close = spec.find('}');
  if (open != std::string::npos && close != std::string::npos && close > open) {
    const auto inner = spec.substr(open + 1, close - open - 1);
    const auto arrow = inner.find(" => ");
    const auto pre = spec.substr(0, open);
    const auto post = spec.substr(close + 1);
    return {collapse_slashes(pre + inner.substr(0, arrow) + post), collapse_slashes(pre + inner.substr(arrow + 4) + post)};
  }
  const auto arrow = spec.find(" => ");
  return {spec.substr(0, arrow), spec.substr(arrow + 4)};
}

}  // namespace

std::optional<Timestamp> parse_iso8601(std::string_view text) {
  const std::string s = trim(text);
  int y = 0, mo = 0, d = 0, h = 0, mi = 0, sec = 0;
  if (!read_int(s, 0, 4, y) || s.size() < 10 || s[4] != '-' || !read_int(s, 5, 2, mo) || s[7] != '-' ||
      !read_int(s, 8, 2, d)) {
    return std::nullopt;
  }
  if (mo < 1 || mo > 12 || d < 1 || d > 31) return std::nullopt;
  std::size_t pos = 10;
  std::int64_t offset = 0;
  if (pos < s.size()) {
    if (s[pos] != 'T' && s[pos] != ' ') return std::nullopt;
    if (!read_int(s, pos + 1, 2, h) || pos + 3 >= s.size() || s[pos + 3] != ':' || !read_int(s, pos + 4, 2, mi)) {
      return std::nullopt;
    }
    pos += 6;
    if (pos < s.size() && s[pos] == ':') {
      if (!read_int(s, pos + 1, 2, sec)) return std::nullopt;
      pos += 3;
      if (pos < s.size() && s[pos] == '.') {
        ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      }
    }
    if (h > 23 || mi > 59 || sec > 60) return std::nullopt;
    if (pos < s.size()) {
      if (s[pos] == 'Z' && pos + 1 == s.size()) {
        pos += 1;
      } else if (s[pos] == '+' || s[pos] == '-') {
        int oh = 0, om = 0;
        if (!read_int(s, pos + 1, 2, oh)) return std::nullopt;
        std::size_t next = pos + 3;
        if (next < s.size() && s[next] == ':') ++next;
        if (next < s.size() && !read_int(s, next, 2, om)) return std::nullopt;
        if (next < s.size()) next += 2;
        if (next != s.size()) return std::nullopt;
        offset = (s[pos] == '+' ? 1 : -1) * (oh * 3600 + om * 60);
        pos = next;
      } else {
        return std::nullopt;
      }
    }
  }
  return days_from_civil(y, static_cast<unsigned>(mo), static_cast<unsigned>(d)) * 86400 + h * 3600 + mi * 60 + sec -
         offset;
}

std::string format_iso8601(Timestamp t) {
  std::int64_t days = t >= 0 ? t / 86400 : (t - 86399) / 86400;
  std::int64_t rem = t - days * 86400;
  // civil_from_days
  days += 719468;
  const std::int64_t era = (days >= 0 ? days : days - 146096) / 146097;
  const unsigned doe = static_cast<unsigned>(days - era * 146097);
  const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
  const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
  const unsigned mp = (5 * doy + 2) / 153;
  const unsigned d = doy - (153 * mp + 2) / 5 + 1;
  const unsigned m = mp < 10 ? mp + 3 : mp - 9;
  const std::int64_t y = static_cast<std::int64_t>(yoe) + era * 400 + (m <= 2);
  char buf[96];
  std::snprintf(buf, sizeof buf, "%04lld-%02u-%02uT%02lld:%02lld:%02lldZ", static_cast<long long>(y), m, d,
                static_cast<long long>(rem / 3600), static_cast<long long>(rem % 3600 / 60),
                static_cast<long long>(rem % 60));
  return buf;
}

ChangeLog parse_change_log(const std::vector<std::string>& lines, const std::string& source) {
  ChangeLog log;
  std::optional<Timestamp> last_commit;
  for (std::size_t r = 0; r < lines.size(); ++r) {
    const auto line = trim(lines[r]);
    if (line.empty() || line.front() == '#') continue;
    const auto f = split(line, '|');
    const std::size_t row = r + 1;
    if (f.size() == 3 && f[0] == "R") {
      if (f[1].empty() || f[2].empty()) throw ParseError("rename record needs two paths", source, row);
      log.renames.push_back({f[1], f[2], last_commit.value_or(std::numeric_limits<Timestamp>::min())});
      continue;
    }
    if (f.size() == 3 && f[0] == "T") {
      const auto ts = parse_iso8601(f[2]);
      if (!ts) throw ParseError("invalid tag timestamp '" + f[2] + "'", source, row);
      log.tags[f[1]] = *ts;
      continue;
    }
    if (f.size() != 6) throw ParseError("expected 6 fields, found " + std::to_string(f.size()), source, row);
    LogEntry e;
    e.commit_id = f[0];
    const auto ts = parse_iso8601(f[1]);
    if (!ts) throw ParseError("invalid timestamp '" + f[1] + "'", source, row, "timestamp");
    e.timestamp = *ts;
    e.author = f[2];
    e.path = f[3];
    const auto added = parse_count(f[4]);
    const auto deleted = parse_count(f[5]);
    if (!added) throw ParseError("invalid count '" + f[4] + "'", source, row, "added");
    if (!deleted) throw ParseError("invalid count '" + f[5] + "'", source, row, "deleted");
    if (e.commit_id.empty() || e.path.empty()) throw ParseError("empty commit id or path", source, row);
    e.added = *added;
    e.deleted = *deleted;
    last_commit = e.timestamp;
    log.entries.push_back(std::move(e));
  }
  return log;
}

ChangeLog load_change_log(const std::string& path) { return parse_change_log(csv::read_lines(path), path); }

ChangeLog parse_git_output(const std::string& log_text, const std::string& tag_text) {
  ChangeLog log;
  std::istringstream in(log_text);
  std::string id, author;
  Timestamp ts = 0;
  for (std::string line; std::getline(in, line);) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line.rfind("@@", 0) == 0) {
      const auto f = split(std::string_view(line).substr(2), '|');
      if (f.size() < 3) throw ParseError("malformed git header '" + line + "'", "git log");
      const auto parsed = parse_iso8601(f[1]);
      if (!parsed) throw ParseError("invalid git date '" + f[1] + "'", "git log");
      id = f[0];
      ts = *parsed;
      author = f[2];
      for (std::size_t i = 3; i < f.size(); ++i) author += "|" + f[i];
      continue;
    }
    const auto f = split(line, '\t');
    if (f.size() != 3 || id.empty()) throw ParseError("malformed numstat line '" + line + "'", "git log");
    if (f[0] == "-" || f[1] == "-") continue;  // binary file
    std::string path = f[2];
    if (path.find(" => ") != std::string::npos) {
      auto [old_path, new_path] = split_rename(path);
      log.renames.push_back({old_path, new_path, ts});
      path = new_path;
    }
    const auto added = parse_count(f[0]);
    const auto deleted = parse_count(f[1]);
    if (!added || !deleted) throw ParseError("malformed numstat counts '" + line + "'", "git log");
    log.entries.push_back({id, ts, author, path, *added, *deleted});
  }
  std::istringstream tags(tag_text);
  for (std::string line; std::getline(tags, line);) {
    const auto bar = line.rfind('|');
    if (bar == std::string::npos) continue;
    if (const auto t = parse_iso8601(line.substr(bar + 1))) log.tags[line.substr(0, bar)] = *t;
  }
  return log;
}

ChangeLog read_git_history(const std::string& repo) {
  const auto q = shell_quote(repo);
  const auto log_text = run_command("git -C " + q +
                                    " log --reverse --numstat -M --no-color --format='@@%H|%cI|%an <%ae>' 2>/dev/null");
  const auto tag_text =
      run_command("git -C " + q + " for-each-ref --format='%(refname:short)|%(creatordate:iso-strict)' refs/tags");
  return parse_git_output(log_text, tag_text);
}

ClassPathIndex::ClassPathIndex(const std::vector<std::string>& class_names) {
  for (const auto& name : class_names) {
    std::string suffix = name;
    std::replace(suffix.begin(), suffix.end(), '.', '/');
    by_suffix_.emplace(suffix + ".java", name);
  }
}

std::optional<std::string> ClassPathIndex::resolve(std::string_view raw) const {
  std::string path(raw);
  std::replace(path.begin(), path.end(), '\\', '/');
  for (std::size_t start = 0; start < path.size();) {
    const auto it = by_suffix_.find(path.substr(start));
    if (it != by_suffix_.end()) return it->second;
    const auto slash = path.find('/', start);
    if (slash == std::string::npos) break;
    start = slash + 1;
  }
  return std::nullopt;
}

Timestamp resolve_tag(const ChangeLog& log, const std::string& tag, const std::map<std::string, Timestamp>& overrides) {
  if (auto it = overrides.find(tag); it != overrides.end()) return it->second;
  if (auto it = log.tags.find(tag); it != log.tags.end()) return it->second;
  throw InputError("unresolvable release tag '" + tag + "'");
}

ChangeHistory ingest_history(const ChangeLog& log, const ReleaseWindow& window, const ClassPathIndex& index) {
  std::unordered_map<std::string, std::string> alias;
  for (const auto& r : log.renames) {
    if (r.effective <= window.to) alias[r.old_path] = r.new_path;
  }
  auto follow = [&](std::string path) {
    for (int hops = 0; hops < 64; ++hops) {
      const auto it = alias.find(path);
      if (it == alias.end() || it->second == path) break;
      path = it->second;
    }
    return path;
  };

  ChangeHistory h;
  h.window = window;
  std::unordered_map<std::string, std::size_t> slot;
  for (const auto& e : log.entries) {
    if (e.timestamp > window.to || (window.from && e.timestamp <= *window.from)) continue;
    if (e.added + e.deleted == 0) continue;
    const auto cls = index.resolve(follow(e.path));
    if (!cls) continue;
    auto [it, fresh] = slot.emplace(e.commit_id, h.commits.size());
    if (fresh) h.commits.push_back({e.commit_id, e.timestamp, lower(e.author), {}});
    h.commits[it->second].touched.push_back({e.path, *cls, e.added, e.deleted});
  }
  std::stable_sort(h.commits.begin(), h.commits.end(),
                   [](const Commit& a, const Commit& b) { return a.timestamp < b.timestamp; });
  return h;
}

}  // namespace smellscope
