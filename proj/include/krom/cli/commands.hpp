#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "krom/cli/config.hpp"

namespace krom::cli {

inline constexpr const char* kVersion = "0.1.0";

/// Exit codes shared by every subcommand.
enum ExitCode : int { kOk = 0, kValidation = 1, kRuntime = 2 };

struct GenDataResult {
  std::vector<std::filesystem::path> files;
  std::vector<std::string> failures;  // "run N: message"
  double seconds = 0.0;
};

/// Simulates dataset.n_runs schedules in parallel and writes one .mste per run.
GenDataResult cmd_gen_data(const RunConfig& cfg, std::size_t threads, std::ostream& log);

struct TrainOutcome {
  std::filesystem::path checkpoint;
  std::filesystem::path loss_csv;
  std::vector<train::LossBreakdown> history;
  double seconds = 0.0;
};

/// Trains one model on the training split. e2c forces k = 1.
TrainOutcome cmd_train(const RunConfig& cfg, model::ModelKind kind, std::size_t k, std::size_t threads,
                       std::ostream& log);

struct EvaluateOutcome {
  eval::Comparison comparison;
  std::vector<std::filesystem::path> files;
  double seconds = 0.0;
};

/// Rolls every checkpoint over the test split and writes the report files.
EvaluateOutcome cmd_evaluate(const RunConfig& cfg, const std::vector<std::filesystem::path>& checkpoints,
                             std::size_t threads, std::ostream& log);

/// Loads trajectories of the given run ids; IoError names the first missing file.
std::vector<data::Trajectory> load_runs(const RunConfig& cfg, const std::vector<std::size_t>& ids);

/// Merges one command record into the manifest file. Records from a run with
/// a different config hash are discarded.
void update_manifest(const RunConfig& cfg, const std::string& command, const nlohmann::json& record);

}  // namespace krom::cli
