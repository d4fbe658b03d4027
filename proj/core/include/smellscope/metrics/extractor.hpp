#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "smellscope/metrics/code_model.hpp"
#include "smellscope/metrics/java_syntax.hpp"

namespace smellscope {

struct ExtractOptions {
  unsigned threads = 1;
};

// Parses every `.java` file under `source_root`. Files that fail to parse become
// diagnostics. Throws InputError for a missing directory and EmptyModelError when
// no class could be parsed.
CodeModel parse_release(const std::filesystem::path& source_root, const std::string& release_id,
                        const ExtractOptions& options = {});

// Resolves names across already-parsed files and builds the immutable model.
CodeModel build_model(const std::string& release_id, const std::vector<java::SyntaxFile>& files,
                      std::vector<Diagnostic> diagnostics = {});

// Lower-cased identifier fragments: camelCase and snake_case words are split apart.
std::vector<std::string> split_identifier(std::string_view identifier);

}  // namespace smellscope
