#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "krom/data/dataset.hpp"
#include "krom/model/model.hpp"

namespace krom::train {

struct TrainConfig {
  std::size_t epochs = 400;
  std::size_t batch_size = 6;
  double learning_rate = 0.01;
  std::size_t k = 5;
  double w_rec = 1.0;
  double w_reg = 1.0;
  double w_koop = 1.0;
  double lambda_prior = 1e-6;
  std::uint64_t seed = 0;
  /// Batch items are split into this many sub-batches evaluated in parallel.
  std::size_t threads = 1;

  void validate() const;
};

/// Loss values in normalized units squared.
struct LossBreakdown {
  double rec = 0.0;
  double reg = 0.0;
  double koop = 0.0;
  double total = 0.0;
};

/// Windows laid out step-major: row i * size + b holds x_{t+i} of window b.
struct Batch {
  std::size_t size = 0;
  std::size_t k = 0;
  Tensor states;    // ((k+1)*size, 2, ny, nx)
  Tensor controls;  // (k*size, n_u)
};

Batch make_batch(std::span<const data::Window> windows, std::span<const data::NormalizedTrajectory> trajs);

struct LossVars {
  Var rec, reg, koop, total;
};

/// Builds all loss terms for a batch on `g`. For e2c models the batch must
/// hold k = 1 windows and koop is a constant zero.
LossVars build_losses(Graph& g, const model::Hyper& h, const Batch& batch, const TrainConfig& cfg);

double loss_rec(const data::Window& w, std::span<const data::NormalizedTrajectory> trajs,
                const model::ModelParams& m, const TrainConfig& cfg);
double loss_reg(const data::Window& w, std::span<const data::NormalizedTrajectory> trajs,
                const model::ModelParams& m, const TrainConfig& cfg);
/// KindError for e2c models.
double loss_koop(const data::Window& w, std::span<const data::NormalizedTrajectory> trajs,
                 const model::ModelParams& m, const TrainConfig& cfg);
LossBreakdown total_loss(const data::Window& w, std::span<const data::NormalizedTrajectory> trajs,
                         const model::ModelParams& m, const TrainConfig& cfg);

/// Mean-batch-loss gradient with sub-batches reduced in fixed order.
struct BatchGrad {
  LossBreakdown loss;
  GradRecord grads;
};
BatchGrad batch_gradient(const model::ModelParams& m, std::span<const data::Window> windows,
                         std::span<const data::NormalizedTrajectory> trajs, const TrainConfig& cfg);

struct TrainResult {
  model::ModelParams model;
  std::vector<LossBreakdown> history;  // one entry per epoch
};

using EpochCallback = std::function<void(std::size_t epoch, const LossBreakdown&)>;

/// Adam on shuffled mini-batches of k-step windows (k = 1 for e2c).
/// Throws NonFiniteError with epoch/batch indices if the loss diverges.
TrainResult train(const model::ModelParams& init, std::span<const data::NormalizedTrajectory> trajs,
                  const TrainConfig& cfg, const EpochCallback& on_epoch = {});

void write_loss_csv(const std::string& path, const std::vector<LossBreakdown>& history);

}  // namespace krom::train
