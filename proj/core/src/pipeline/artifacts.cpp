#include "smellscope/pipeline/artifacts.hpp"

#include <nlohmann/json.hpp>
#include <sstream>

#include "smellscope/common/csv.hpp"
#include "smellscope/common/error.hpp"

namespace smellscope {

using nlohmann::ordered_json;

std::string evaluation_json_string(const EvaluationResult& r) {
  ordered_json j;
  j["spec"] = r.spec;
  j["release"] = r.release;
  j["features"] = r.features;
  j["vif_removed"] = r.vif_removed;
  j["cv"] = {{"k", r.options.k},
             {"repeats", r.options.repeats},
             {"base_seed", r.options.base_seed},
             {"lambda", r.options.lambda},
             {"threshold", r.options.threshold}};
  j["seeds"] = r.seeds;
  j["aggregate"] = {{"precision", r.precision}, {"recall", r.recall}, {"f_measure", r.f_measure}, {"auc_roc", r.auc_roc}};
  ordered_json folds = ordered_json::array();
  for (const auto& f : r.folds) {
    folds.push_back({{"repeat", f.repeat},
                     {"fold", f.fold},
                     {"tp", f.counts.tp},
                     {"fp", f.counts.fp},
                     {"tn", f.counts.tn},
                     {"fn", f.counts.fn},
                     {"precision", f.scores.precision},
                     {"recall", f.scores.recall},
                     {"f_measure", f.scores.f_measure},
                     {"auc_roc", f.auc}});
  }
  j["folds"] = folds;
  j["rows"] = r.row_keys;
  j["positive_votes"] = r.positive_votes;
  j["true_positives"] = r.true_positives;
  j["fold_assignments"] = r.fold_assignments;
  j["notes"] = r.notes;
  return j.dump(2) + "\n";
}

EvaluationResult parse_evaluation_json(const std::string& text, const std::string& source) {
  EvaluationResult r;
  try {
    const auto j = ordered_json::parse(text);
    r.spec = j.at("spec").get<std::string>();
    r.release = j.at("release").get<std::string>();
    r.features = j.at("features").get<std::vector<std::string>>();
    r.vif_removed = j.at("vif_removed").get<std::vector<std::string>>();
    const auto& cv = j.at("cv");
    r.options.k = cv.at("k").get<int>();
    r.options.repeats = cv.at("repeats").get<int>();
    r.options.base_seed = cv.at("base_seed").get<std::uint64_t>();
    r.options.lambda = cv.at("lambda").get<double>();
    r.options.threshold = cv.at("threshold").get<double>();
    r.seeds = j.at("seeds").get<std::vector<std::uint64_t>>();
    const auto& a = j.at("aggregate");
    r.precision = a.at("precision").get<double>();
    r.recall = a.at("recall").get<double>();
    r.f_measure = a.at("f_measure").get<double>();
    r.auc_roc = a.at("auc_roc").get<double>();
    for (const auto& f : j.at("folds")) {
      FoldResult fr;
      fr.repeat = f.at("repeat").get<int>();
      fr.fold = f.at("fold").get<int>();
      fr.counts = {f.at("tp").get<std::size_t>(), f.at("fp").get<std::size_t>(), f.at("tn").get<std::size_t>(),
                   f.at("fn").get<std::size_t>()};
      fr.scores = {f.at("precision").get<double>(), f.at("recall").get<double>(), f.at("f_measure").get<double>()};
      fr.auc = f.at("auc_roc").get<double>();
      r.folds.push_back(fr);
    }
    r.row_keys = j.at("rows").get<std::vector<std::string>>();
    r.positive_votes = j.at("positive_votes").get<std::vector<int>>();
    r.true_positives = j.at("true_positives").get<std::vector<std::string>>();
    r.fold_assignments = j.at("fold_assignments").get<std::vector<std::vector<int>>>();
    r.notes = j.at("notes").get<std::vector<std::string>>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid evaluation document: ") + e.what(), source);
  }
  return r;
}

EvaluationResult load_evaluation(const std::string& path) {
  std::string text;
  for (const auto& l : csv::read_lines(path)) text += l + "\n";
  return parse_evaluation_json(text, path);
}

std::string overlap_table_string(const std::vector<OverlapRow>& rows) {
  std::ostringstream out;
  csv::write_record(out, {"model_pair", "both", "only_a", "only_b"});
  for (const auto& r : rows) {
    csv::write_record(out, {r.model_a + " vs " + r.model_b, csv::format_number(r.both), csv::format_number(r.only_a),
                            csv::format_number(r.only_b)});
  }
  return out.str();
}

std::vector<OverlapRow> parse_overlap_table(const std::vector<std::string>& lines, const std::string& source) {
  const std::vector<std::string> header{"model_pair", "both", "only_a", "only_b"};
  if (lines.empty() || csv::split_record(lines[0]) != header) throw SchemaError(source + ": unexpected overlap header");
  std::vector<OverlapRow> out;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    const auto cells = csv::split_record(lines[i]);
    const auto sep = cells.empty() ? std::string::npos : cells[0].find(" vs ");
    if (cells.size() != 4 || sep == std::string::npos) throw ParseError("malformed overlap row", source, i + 1);
    OverlapRow row{cells[0].substr(0, sep), cells[0].substr(sep + 4), 0, 0, 0};
    double* slots[] = {&row.both, &row.only_a, &row.only_b};
    for (std::size_t c = 1; c < 4; ++c) {
      const auto v = csv::parse_number(cells[c]);
      if (!v) throw ParseError("non-numeric value", source, i + 1, header[c]);
      *slots[c - 1] = *v;
    }
    out.push_back(row);
  }
  return out;
}

std::string artifact_stem(const std::string& release, const std::string& spec) { return release + "__" + spec; }

}  // namespace smellscope
