#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include "krom/numerics/graph.hpp"

namespace krom {

/// Builds a scalar on a graph whose parameters are the ones being checked.
using Objective = std::function<Var(Graph&)>;

struct GradCheckOptions {
  double step = 1e-5;
  std::size_t draws = 100;
  std::uint64_t seed = 0;
  /// Denominator floor for the relative error. Central differences at
  /// step 1e-5 carry ~1e-11 absolute roundoff, so smaller gradients are
  /// compared in absolute terms.
  double floor = 1e-5;
  /// Multiplies the reverse-mode gradient by (1 + fault); test hook only.
  double fault = 0.0;
};

struct GradCheckResult {
  double max_rel_error = 0.0;
  std::string worst_param;
  std::size_t worst_index = 0;
  double worst_analytic = 0.0, worst_numeric = 0.0;
  std::size_t checked = 0;
  /// Draws rejected because the +-step stencil crossed a relu kink.
  std::size_t skipped_kinks = 0;
};

/// Compares reverse-mode gradients with central differences on `draws`
/// entries sampled uniformly over all parameter entries. The error of one
/// entry is |a - n| / max(|a|, |n|, floor). Entries whose stencil changes the
/// relu sign pattern are not differentiable at that resolution and are redrawn.
GradCheckResult gradient_check(const Objective& f, const ParamSet& params, const GradCheckOptions& opt = {});

}  // namespace krom
