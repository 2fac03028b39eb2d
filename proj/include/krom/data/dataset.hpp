#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "krom/sim/types.hpp"

namespace krom::data {

using sim::Trajectory;

/// Writes the MSTE binary trajectory format.
void write_trajectory(const std::string& path, const Trajectory& traj);
std::vector<char> encode_trajectory(const Trajectory& traj);

/// Reads MSTE. FormatError on bad magic/version/dimensions, TruncationError
/// when the file length disagrees with the header.
Trajectory read_trajectory(const std::string& path);
Trajectory decode_trajectory(std::span<const char> bytes, const std::string& what = "trajectory");

constexpr std::size_t kStateChannels = 2;  // pressure, saturation

/// Min-max scaling statistics, fitted on training trajectories only.
struct NormStats {
  std::vector<double> state_min, state_max;      // per channel
  std::vector<double> control_min, control_max;  // per control component

  std::size_t n_controls() const { return control_min.size(); }
  /// Channels or controls with max == min; they are scaled by 1.
  std::vector<std::string> constant_components() const;
  friend bool operator==(const NormStats&, const NormStats&) = default;
};

NormStats compute_norm_stats(std::span<const Trajectory> trajectories);

/// Flattened (channel, y, x) field for snapshot `t`, normalized to [0,1].
std::vector<double> normalize_state(const sim::SimState& s, const NormStats& st);
sim::SimState denormalize_state(std::span<const double> x, std::size_t cells, const NormStats& st);
std::vector<double> normalize_controls(std::span<const double> u, const NormStats& st);
std::vector<double> denormalize_controls(std::span<const double> u, const NormStats& st);

/// A trajectory in model units: each state is a (2, ny, nx) field.
struct NormalizedTrajectory {
  std::size_t nx = 0, ny = 0;
  std::vector<std::vector<double>> states;
  std::vector<std::vector<double>> controls;
};

NormalizedTrajectory normalize_trajectory(const Trajectory& t, const NormStats& st);

/// Index view of a k-step training tuple {x_t, u_t, ..., x_{t+k}}.
struct Window {
  std::size_t traj = 0;   // index into the trajectory list
  std::size_t start = 0;  // t
  std::size_t k = 1;
};

struct Windowing {
  std::vector<Window> windows;
  std::size_t skipped = 0;  // trajectories shorter than k+1 snapshots
};

/// n_snapshots - k windows per trajectory, ordered by trajectory then start.
Windowing window_trajectories(std::span<const std::size_t> snapshot_counts, std::size_t k);
Windowing window_trajectories(std::span<const NormalizedTrajectory> trajs, std::size_t k);

/// Materialized states x_t..x_{t+k} and controls u_t..u_{t+k-1} of a window.
std::vector<std::vector<double>> window_states(const Window& w,
                                               std::span<const NormalizedTrajectory> trajs);
std::vector<std::vector<double>> window_controls(const Window& w,
                                                 std::span<const NormalizedTrajectory> trajs);

struct DatasetSplit {
  std::vector<std::size_t> train;
  std::vector<std::size_t> test;
};

/// Seeded shuffle followed by a prefix split at whole-trajectory granularity.
DatasetSplit split_train_test(std::span<const std::size_t> ids, double train_ratio, double test_ratio,
                              std::uint64_t seed);

}  // namespace krom::data
