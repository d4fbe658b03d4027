#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace smellscope {

// Seconds since the Unix epoch, UTC.
using Timestamp = std::int64_t;

// Accepts "YYYY-MM-DD", "YYYY-MM-DDThh:mm[:ss][.fff]" with optional "Z" or "+hh:mm" offset.
std::optional<Timestamp> parse_iso8601(std::string_view text);
std::string format_iso8601(Timestamp t);

struct LogEntry {
  std::string commit_id;
  Timestamp timestamp = 0;
  std::string author;
  std::string path;
  int added = 0;
  int deleted = 0;
};

struct RenameRecord {
  std::string old_path;
  std::string new_path;
  Timestamp effective = 0;  // timestamp of the preceding commit record
};

// A parsed log export: file-touch records, renames, and release tag dates.
struct ChangeLog {
  std::vector<LogEntry> entries;
  std::vector<RenameRecord> renames;
  std::map<std::string, Timestamp> tags;
};

// Lines are `commit|timestamp|author|path|added|deleted`, `R|old|new`, or `T|tag|timestamp`.
// Blank lines and lines starting with '#' are skipped.
ChangeLog parse_change_log(const std::vector<std::string>& lines, const std::string& source = {});
ChangeLog load_change_log(const std::string& path);

// Runs git in `repo` and converts `git log --numstat -M` output plus tag dates.
ChangeLog read_git_history(const std::string& repo);
// Exposed for testing: converts raw `git log` output in the format used by read_git_history.
ChangeLog parse_git_output(const std::string& log_text, const std::string& tag_text);

// Maps file paths to class qualified names by longest path-suffix match.
class ClassPathIndex {
 public:
  explicit ClassPathIndex(const std::vector<std::string>& class_names);
  // nullopt for files that do not correspond to a known class.
  std::optional<std::string> resolve(std::string_view path) const;

 private:
  std::map<std::string, std::string> by_suffix_;  // "a/b/Foo.java" -> "a.b.Foo"
};

struct FileTouch {
  std::string path;
  std::string class_name;
  int added = 0;
  int deleted = 0;

  friend bool operator==(const FileTouch&, const FileTouch&) = default;
};

struct Commit {
  std::string id;
  Timestamp timestamp = 0;
  std::string author;  // lowercased
  std::vector<FileTouch> touched;

  friend bool operator==(const Commit&, const Commit&) = default;
};

// Half-open window (from, to]; `from` is nullopt for the first release.
struct ReleaseWindow {
  std::string from_tag;
  std::string to_tag;
  std::optional<Timestamp> from;
  Timestamp to = 0;
};

struct ChangeHistory {
  ReleaseWindow window;
  std::vector<Commit> commits;  // ascending by timestamp
};

// Resolves a tag from explicit overrides first, then from the log. Throws InputError.
Timestamp resolve_tag(const ChangeLog& log, const std::string& tag,
                      const std::map<std::string, Timestamp>& overrides = {});

// Commits inside the window whose touched files map to known classes. Renames effective
// up to the window end are followed, so earlier changes are attributed to the new name.
ChangeHistory ingest_history(const ChangeLog& log, const ReleaseWindow& window, const ClassPathIndex& index);

}  // namespace smellscope
