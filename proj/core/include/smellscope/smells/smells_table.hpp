#pragma once

#include <string>
#include <vector>

#include "smellscope/smells/detector.hpp"

namespace smellscope {

// smells.csv: release,kind,entity,owner_class,predicates
// predicates are ';'-joined "<METRIC><op><threshold>@<actual>" items.
std::string smells_table_string(const std::vector<SmellInstance>& instances);
std::vector<SmellInstance> parse_smells_table(const std::vector<std::string>& lines, const std::string& source = {});
std::vector<SmellInstance> load_smells_table(const std::string& path);

}  // namespace smellscope
