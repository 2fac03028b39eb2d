#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace krom::sim {

constexpr double kSecondsPerDay = 86400.0;

/// Uniform Cartesian grid, one layer thick. Cells are indexed j * nx + i.
struct GridSpec {
  std::size_t nx = 64;
  std::size_t ny = 64;
  double dx = 20.0;  // m
  double dy = 20.0;
  double dz = 20.0;
  std::vector<double> porosity;  // per cell; empty means uniform 0.2

  std::size_t cells() const { return nx * ny; }
  std::size_t index(std::size_t i, std::size_t j) const { return j * nx + i; }
  double cell_volume() const { return dx * dy * dz; }
  double porosity_at(std::size_t cell) const { return porosity.empty() ? 0.2 : porosity[cell]; }

  /// Throws ConfigError on violated invariants.
  void validate() const;
};

struct RockFluidProps {
  std::vector<double> perm;  // m^2, per cell
  double mu_w = 5e-4;        // Pa s
  double mu_o = 3e-3;
  double swc = 0.2;
  double sor = 0.2;
  double nw = 2.0;
  double no = 2.0;
  double krw0 = 1.0;
  double kro0 = 1.0;

  double sw_min() const { return swc; }
  double sw_max() const { return 1.0 - sor; }
  void validate(const GridSpec& grid) const;
};

enum class WellKind { injector, producer };

struct WellSpec {
  std::string id;
  std::size_t i = 0;
  std::size_t j = 0;
  WellKind kind = WellKind::injector;
  double radius = 0.1;  // m
};

/// Injectors first, then producers, each in declaration order. This is also
/// the ordering of every control vector.
std::vector<WellSpec> ordered_wells(const std::vector<WellSpec>& wells);
std::size_t count_kind(const std::vector<WellSpec>& wells, WellKind kind);
void validate_wells(const std::vector<WellSpec>& wells, const GridSpec& grid);

/// Four injectors at the quadrant midpoints and five producers in a quincunx
/// (corners inset by nx/8 cells plus the centre). Mirror-symmetric except for
/// the centre well on even grids.
/// Grids smaller than 8x8 need an explicit layout.
std::vector<WellSpec> default_wells(std::size_t nx, std::size_t ny);

/// Piecewise-constant well controls. Each vector holds injector rates (m^3/s)
/// followed by producer BHPs (Pa).
struct ControlSchedule {
  double period_length = 100.0 * kSecondsPerDay;
  std::vector<std::vector<double>> controls;

  std::size_t n_periods() const { return controls.size(); }
};

struct SimState {
  std::vector<double> pressure;  // Pa
  std::vector<double> sw;
  double time = 0.0;  // s

  friend bool operator==(const SimState&, const SimState&) = default;
};

/// One simulation run: snapshots at report times plus the controls between them.
struct Trajectory {
  std::size_t nx = 0;
  std::size_t ny = 0;
  std::vector<SimState> snapshots;
  std::vector<std::vector<double>> controls;

  std::size_t n_controls() const { return controls.empty() ? 0 : controls.front().size(); }
  friend bool operator==(const Trajectory&, const Trajectory&) = default;
};

}  // namespace krom::sim
