#pragma once

#include <cstdint>

#include "krom/numerics/tensor.hpp"

namespace krom {

struct AdamConfig {
  double beta1 = 0.9;
  double beta2 = 0.999;
  double eps = 1e-8;
};

/// First/second moment estimates plus the number of updates applied so far.
struct AdamState {
  ParamSet m;
  ParamSet v;
  std::uint64_t step = 0;
};

/// One bias-corrected Adam update. Moments are created as zeros on the first
/// call. Throws NonFiniteError naming the parameter if a gradient has NaN/Inf.
ParamSet adam_step(const ParamSet& params, const GradRecord& grads, AdamState& state,
                   double lr, const AdamConfig& cfg = {});

/// Glorot-uniform tensor: U(-a, a) with a = sqrt(6 / (fan_in + fan_out)).
class Rng;
Tensor glorot_uniform(Shape shape, std::size_t fan_in, std::size_t fan_out, Rng& rng);

}  // namespace krom
