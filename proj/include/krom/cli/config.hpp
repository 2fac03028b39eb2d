#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "krom/eval/evaluation.hpp"
#include "krom/model/model.hpp"
#include "krom/sim/physics.hpp"
#include "krom/sim/simulator.hpp"
#include "krom/train/training.hpp"

namespace krom::cli {

/// Unit conversion into SI.
namespace units {
inline constexpr double kFoot = 0.3048;          // m
inline constexpr double kPsi = 6894.757;         // Pa
inline constexpr double kStbPerDay = 1.8401e-6;  // m^3/s
}  // namespace units

struct SamplingConfig {
  std::size_t n_periods = 20;
  double period_length = 100.0 * sim::kSecondsPerDay;  // s
  sim::Range rate{50.0 / sim::kSecondsPerDay, 200.0 / sim::kSecondsPerDay};  // m^3/s
  sim::Range bhp{15e6, 22e6};                                                 // Pa
};

struct DatasetConfig {
  std::size_t n_runs = 100;
  double train_ratio = 4.0;
  double test_ratio = 1.0;
  std::uint64_t seed = 1;
};

struct ModelConfig {
  model::ModelKind kind = model::ModelKind::mse2c;
  std::size_t n_z = 50;
  std::size_t n_l = 100;
  std::size_t k = 5;
};

struct EvalConfig {
  std::size_t horizon = 20;
  model::PredictMode mode = model::PredictMode::linear_rollout;
  bool write_rollouts = false;
};

struct PathsConfig {
  std::filesystem::path data_dir = "data";
  std::filesystem::path checkpoint_dir = "checkpoints";
  std::filesystem::path report_dir = "report";
  std::filesystem::path manifest = "manifest.json";
};

/// Fully resolved run configuration, SI units throughout.
struct RunConfig {
  sim::GridSpec grid;
  sim::PermFieldParams perm;
  sim::RockFluidProps fluids;  // perm left empty, see rock()
  std::vector<sim::WellSpec> wells;
  sim::SimOptions sim;
  SamplingConfig sampling;
  DatasetConfig dataset;
  ModelConfig model;
  train::TrainConfig training;
  EvalConfig eval;
  PathsConfig paths;

  nlohmann::json source;  // as parsed, before defaults
  std::string hash;

  std::size_t n_injectors() const { return sim::count_kind(wells, sim::WellKind::injector); }
  std::size_t n_controls() const { return wells.size(); }
  sim::RockFluidProps rock() const;
  model::Hyper hyper(model::ModelKind kind, std::size_t k) const;
  data::DatasetSplit split() const;
  std::filesystem::path trajectory_path(std::size_t run) const;

  /// Overrides dataset and training seeds.
  void override_seed(std::uint64_t seed);
};

/// Throws ConfigError on unknown keys, bad types or violated invariants.
/// Relative paths are resolved against `base_dir`.
RunConfig parse_config(const nlohmann::json& j, const std::filesystem::path& base_dir = {});
RunConfig load_config(const std::filesystem::path& path);

/// FNV-1a 64 over the canonical (sorted-key, compact) dump, as 16 hex digits.
std::string config_hash(const nlohmann::json& j);

}  // namespace krom::cli
