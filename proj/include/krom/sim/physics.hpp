#pragma once

#include <cstdint>
#include <vector>

#include "krom/sim/types.hpp"

namespace krom::sim {

struct FracFlow {
  double fw;       // water fractional flow
  double lambda_t;  // total mobility, 1/(Pa s)
};

/// Corey relative permeabilities. Throws DomainError outside [swc, 1 - sor].
FracFlow frac_flow(double sw, const RockFluidProps& props);

/// Total mobility with sw clamped into the mobile range; used where roundoff
/// can push a saturation a few ulps past its bound.
double total_mobility(double sw, const RockFluidProps& props);
double water_fraction(double sw, const RockFluidProps& props);

/// Largest df_w/dsw over the mobile range (sampled, then padded slightly).
double max_frac_flow_slope(const RockFluidProps& props);

/// Peaceman well index for an isotropic square-ish cell, in m^3.
double peaceman_wi(const GridSpec& grid, double perm, double radius);

struct PermFieldParams {
  std::uint64_t seed = 7;
  double log_mean = -29.934;  // ln(1e-13 m^2), about 100 mD
  double log_std = 1.0;
  double corr_len_cells = 4.0;
};

/// Log-normal field from Gaussian-smoothed white noise. The smoothed noise is
/// rescaled to unit pointwise variance before applying log_mean/log_std.
std::vector<double> generate_perm_field(const PermFieldParams& p, std::size_t nx, std::size_t ny);

}  // namespace krom::sim
