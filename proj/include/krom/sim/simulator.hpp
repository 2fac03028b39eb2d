#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "krom/sim/types.hpp"

namespace krom::sim {

struct SimOptions {
  double initial_pressure = 25e6;  // Pa
  std::size_t pressure_steps_per_period = 5;
  double cfl = 0.5;
  std::size_t max_substeps = 100000;
  double cg_rel_tol = 1e-10;
  std::size_t cg_max_iter = 20000;
  std::pair<double, double> bhp_bounds{1e5, 1e8};  // Pa
};

/// Result of one pressure solve: the field plus the fluxes it implies.
struct FlowSolution {
  std::vector<double> pressure;
  std::vector<double> flux_x;  // (nx-1)*ny faces, positive toward +x, m^3/s
  std::vector<double> flux_y;  // nx*(ny-1) faces, positive toward +y
  std::vector<double> well_rates;  // per ordered well, positive = into the reservoir
  std::size_t cg_iterations = 0;
  double rel_residual = 0.0;
};

/// Implicit pressure step. Face mobilities are upwinded by state.pressure;
/// `controls` follows ordered_wells(). Throws SolverError if sources are
/// present but no BHP well anchors the pressure level.
FlowSolution solve_pressure(const SimState& state, const RockFluidProps& props,
                            const GridSpec& grid, const std::vector<WellSpec>& wells,
                            std::span<const double> controls, const SimOptions& opt = {});

/// Explicit upwind transport over dt with CFL sub-stepping. Returns the new
/// water saturation; `water_in`/`water_out` accumulate well water volumes.
std::vector<double> update_saturation(const SimState& state, const FlowSolution& flow,
                                      const RockFluidProps& props, const GridSpec& grid,
                                      const std::vector<WellSpec>& wells, double dt,
                                      const SimOptions& opt = {}, double* water_in = nullptr,
                                      double* water_out = nullptr,
                                      std::size_t* substeps = nullptr);

/// Bookkeeping collected over a run.
struct SimStats {
  double water_injected = 0.0;  // m^3
  double water_produced = 0.0;
  double max_rate_imbalance = 0.0;  // max over solves of |sum q| / total injection
  std::size_t pressure_solves = 0;
  std::size_t substeps = 0;
};

Trajectory run_simulation(const GridSpec& grid, const RockFluidProps& props,
                          const std::vector<WellSpec>& wells, const ControlSchedule& schedule,
                          const SimOptions& opt = {}, SimStats* stats = nullptr);

/// Pore-volume-weighted water volume of a saturation field, m^3.
double pore_water(const GridSpec& grid, std::span<const double> sw);

struct Range {
  double lo = 0.0;
  double hi = 0.0;
};

/// Independent uniform draws per period and well; schedule s uses the seed
/// stream derive_seed(seed, s), so results do not depend on generation order.
std::vector<ControlSchedule> sample_schedules(std::size_t n, std::uint64_t seed,
                                              std::size_t n_injectors, std::size_t n_producers,
                                              std::size_t n_periods, double period_length,
                                              Range rate_range, Range bhp_range);

}  // namespace krom::sim
