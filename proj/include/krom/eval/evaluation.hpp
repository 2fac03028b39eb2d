#pragma once

#include <array>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "krom/data/dataset.hpp"
#include "krom/model/model.hpp"

namespace krom::eval {

enum class Field : std::size_t { pressure = 0, saturation = 1 };
inline constexpr std::size_t kFields = 2;
std::string to_string(Field f);

/// Denormalized rollout against the reference trajectory. mae[t][f] is the
/// spatial mean |x_hat - x| of field f at prediction step t+1.
struct RolloutResult {
  std::vector<sim::SimState> predicted;
  std::vector<sim::SimState> truth;
  std::vector<std::array<double, kFields>> mae;
};

/// Normalized predictions x_1..x_T from normalized x_0 and controls.
using Predictor = std::function<std::vector<std::vector<double>>(
    std::span<const double> x0, std::span<const std::vector<double>> controls, std::size_t T)>;

RolloutResult rollout_with(const Predictor& predict, const data::NormStats& stats, const data::Trajectory& traj,
                           std::size_t T);

/// T defaults to every control step of the trajectory.
RolloutResult rollout_full(const model::Checkpoint& ck, const data::Trajectory& traj,
                           model::PredictMode mode = model::PredictMode::linear_rollout,
                           std::size_t T = static_cast<std::size_t>(-1));

struct ErrorMaps {
  std::vector<std::vector<double>> pressure;    // Pa
  std::vector<std::vector<double>> saturation;  // fraction
};

ErrorMaps abs_error_maps(std::span<const sim::SimState> pred, std::span<const sim::SimState> truth);

struct BoxStats {
  double q1 = 0, median = 0, q3 = 0, whisker_lo = 0, whisker_hi = 0, mean = 0;
};

/// Quartiles by linear interpolation between order statistics; whiskers at
/// the most extreme observations within 1.5 IQR of the box.
BoxStats boxplot_stats(std::span<const double> values);

struct ErrorRow {
  std::size_t timestep = 0;  // 1-based prediction step
  std::string model;
  Field field = Field::pressure;
  BoxStats stats;
};

/// One row per (timestep, field) over the supplied rollouts.
std::vector<ErrorRow> error_table(const std::string& model, std::span<const RolloutResult> results);

struct SampleCount {
  std::size_t k = 0;
  std::size_t samples = 0;
};

std::vector<SampleCount> samples_vs_k(std::size_t n_traj, std::size_t n_snapshots, std::size_t k_max);

/// "e2c" or "mse2c_k<k>".
std::string model_label(const model::Hyper& h);

struct NamedCheckpoint {
  std::string name;
  model::Checkpoint checkpoint;
};

struct FinalSummary {
  std::string model;
  std::size_t timestep = 0;
  std::array<double, kFields> median{};
};

struct Verdict {
  std::string a, b;
  Field field = Field::saturation;
  bool a_wins = false;  // strictly lower final-timestep median
};

struct Comparison {
  std::vector<ErrorRow> rows;
  std::vector<FinalSummary> finals;
  std::vector<Verdict> verdicts;
  std::vector<std::vector<RolloutResult>> rollouts;  // [model][case]
  bool all_finite = true;
};

struct CompareOptions {
  model::PredictMode mode = model::PredictMode::linear_rollout;
  std::size_t horizon = static_cast<std::size_t>(-1);
  std::size_t threads = 1;
};

/// Throws ConfigError if checkpoints disagree on grid or normalization.
Comparison compare_models(std::span<const NamedCheckpoint> models, std::span<const data::Trajectory> test,
                          const CompareOptions& opt = {});

void write_errors_csv(const std::string& path, std::span<const ErrorRow> rows);
void write_samples_csv(const std::string& path, std::span<const SampleCount> rows);
std::string format_summary(const Comparison& c);

}  // namespace krom::eval
