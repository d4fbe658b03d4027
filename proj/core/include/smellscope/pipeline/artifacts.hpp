#pragma once

#include <string>
#include <vector>

#include "smellscope/ml/cross_validation.hpp"

namespace smellscope {

std::string evaluation_json_string(const EvaluationResult& r);
EvaluationResult parse_evaluation_json(const std::string& text, const std::string& source = {});
EvaluationResult load_evaluation(const std::string& path);

struct OverlapRow {
  std::string model_a;
  std::string model_b;
  double both = 0;
  double only_a = 0;
  double only_b = 0;
};

// overlap.csv: model_pair,both,only_a,only_b with model_pair "<a> vs <b>".
std::string overlap_table_string(const std::vector<OverlapRow>& rows);
std::vector<OverlapRow> parse_overlap_table(const std::vector<std::string>& lines, const std::string& source = {});

// File-name form of a release/spec pair: "<release>__<spec>".
std::string artifact_stem(const std::string& release, const std::string& spec);

}  // namespace smellscope
