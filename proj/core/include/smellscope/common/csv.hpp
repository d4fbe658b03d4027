#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace smellscope::csv {

// Splits one RFC 4180 record. Quoted fields may contain commas and doubled quotes,
// but not newlines.
std::vector<std::string> split_record(std::string_view line);

std::string escape(std::string_view field);

void write_record(std::ostream& out, const std::vector<std::string>& fields);

// Shortest representation that parses back to the same double.
std::string format_number(double value);

std::optional<double> parse_number(std::string_view text);

// Reads a whole file, stripping a UTF-8 BOM and trailing CR on each line.
std::vector<std::string> read_lines(const std::string& path);

// Writes to `path` via a temporary sibling so readers never see partial files.
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace smellscope::csv
