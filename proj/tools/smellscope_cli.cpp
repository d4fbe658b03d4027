#include <CLI11.hpp>
#include <iostream>
#include <map>
#include <string>

#include "smellscope/common/error.hpp"
#include "smellscope/pipeline/config.hpp"
#include "smellscope/pipeline/experiment.hpp"
#include "smellscope/pipeline/report.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kValidation = 1;
constexpr int kStageFailure = 2;

struct Flags {
  std::string config;
  std::string out;
  std::string thresholds;
  std::uint64_t seed = 0;
  int threads = 0;
  bool resume = false;
};

void add_flags(CLI::App* cmd, Flags& f, bool needs_config) {
  auto* opt = cmd->add_option("--config", f.config, "Experiment configuration (JSON)");
  if (needs_config) opt->required();
  cmd->add_option("--out", f.out, "Output directory (overrides the configuration)");
  cmd->add_option("--seed", f.seed, "Base seed for cross-validation and ranking");
  cmd->add_option("--threads", f.threads, "Worker threads")->check(CLI::PositiveNumber);
  cmd->add_option("--thresholds", f.thresholds, "Detection threshold overrides (JSON)");
  cmd->add_flag("--resume", f.resume, "Reuse artifacts of completed stages");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Code smell intensity and change-proneness experiments"};
  app.require_subcommand(1);
  Flags flags;
  const std::map<std::string, smellscope::Stage> stages = {
      {"extract", smellscope::Stage::Extract},   {"detect", smellscope::Stage::Detect},
      {"mine", smellscope::Stage::Mine},         {"assemble", smellscope::Stage::Assemble},
      {"evaluate", smellscope::Stage::Evaluate}, {"rank", smellscope::Stage::Rank},
      {"overlap", smellscope::Stage::Overlap},   {"report", smellscope::Stage::Report},
  };
  const std::map<std::string, std::string> help = {
      {"extract", "Parse releases and write metrics.csv"},
      {"detect", "Detect smells and compute intensities"},
      {"mine", "Mine history features and change-proneness labels"},
      {"assemble", "Build and clean per-release datasets"},
      {"evaluate", "Filter features and cross-validate each model"},
      {"rank", "Rank features by gain ratio"},
      {"overlap", "Compare true positives between models"},
      {"report", "Summarize evaluations into report.md"},
  };
  for (const auto& [name, stage] : stages) add_flags(app.add_subcommand(name, help.at(name)), flags, name != "report");
  add_flags(app.add_subcommand("run", "Run the whole pipeline"), flags, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kValidation;
  }
  const std::string command = app.get_subcommands().front()->get_name();

  try {
    if (command == "report" && flags.config.empty()) {
      if (flags.out.empty()) throw smellscope::ValidationError({"report: --config or --out is required"});
      smellscope::emit_report(flags.out);
      std::cout << "wrote report to " << flags.out << "\n";
      return kOk;
    }
    auto config = smellscope::load_config(flags.config);
    if (!flags.out.empty()) config.output = flags.out;
    if (!flags.thresholds.empty()) config.thresholds = flags.thresholds;
    if (flags.threads > 0) config.threads = flags.threads;
    if (app.get_subcommands().front()->count("--seed") > 0) config.seed = flags.seed;
    smellscope::validate_config(config);

    smellscope::RunOptions options;
    options.resume = flags.resume;
    const auto outcome = command == "run" ? smellscope::run_experiment(config, options)
                                          : smellscope::run_stages(config, stages.at(command), options);
    for (const auto& s : outcome.skipped) {
      std::cerr << "skipped " << s.stage << " " << s.release << (s.spec.empty() ? "" : "/" + s.spec) << ": "
                << s.reason << "\n";
    }
    std::cout << "wrote " << outcome.written.size() << " artifacts to " << config.output << "\n";
    return kOk;
  } catch (const smellscope::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return kValidation;
  } catch (const smellscope::StageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kStageFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kStageFailure;
  }
}
