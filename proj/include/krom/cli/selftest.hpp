#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "krom/data/dataset.hpp"
#include "krom/model/model.hpp"
#include "krom/train/training.hpp"

namespace krom::cli {

/// Tiny model (8x8 grid, n_z=4) with a random two-window batch, at a generic
/// parameter point (init plus N(0, 0.05^2) offsets).
struct GradFixture {
  model::ModelParams model;
  std::vector<data::NormalizedTrajectory> trajs;
  train::Batch batch;
  train::TrainConfig cfg;
};

GradFixture tiny_gradient_fixture(model::ModelKind kind, std::uint64_t seed);

struct SelftestOptions {
  std::size_t gradient_draws = 30;
  /// Scales reverse-mode gradients by (1 + fault) inside the gradient check.
  double gradient_fault = 0.0;
};

struct CheckResult {
  std::string module;
  std::string name;
  bool passed = false;
  double value = 0.0;
  double tolerance = 0.0;
  std::string detail;
};

std::vector<CheckResult> run_selftest(const SelftestOptions& opt = {});

}  // namespace krom::cli
