#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "krom/data/dataset.hpp"
#include "krom/numerics/graph.hpp"
#include "krom/numerics/tensor.hpp"

namespace krom::model {

enum class ModelKind : std::uint8_t { e2c = 0, mse2c = 1 };

std::string to_string(ModelKind kind);
ModelKind parse_kind(const std::string& s);

/// Hyperparameters stored in the checkpoint header. The layer layout is a
/// pure function of these (see Architecture).
struct Hyper {
  ModelKind kind = ModelKind::mse2c;
  std::size_t n_z = 50;
  std::size_t n_l = 100;
  std::size_t k = 5;
  std::size_t n_u = 9;
  std::size_t nx = 64;
  std::size_t ny = 64;

  std::size_t lifted_dim() const { return n_z + n_l; }
  friend bool operator==(const Hyper&, const Hyper&) = default;
};

/// Derived layer layout. Stride-2 3x3 convolutions with channels 16/32/64/128,
/// truncated so the bottleneck keeps at least 2x2 cells.
struct Architecture {
  std::vector<std::size_t> channels;
  std::size_t bottleneck_h = 0, bottleneck_w = 0;
  std::size_t hidden = 100;  // lift and transition networks

  std::size_t bottleneck_size() const { return channels.back() * bottleneck_h * bottleneck_w; }
};

Architecture architecture(const Hyper& h);

/// Trainable arrays plus the hyperparameters that shaped them.
struct ModelParams {
  Hyper hyper;
  ParamSet params;
};

/// Expected parameter names and shapes for a hyperparameter set.
std::vector<std::pair<std::string, Shape>> parameter_layout(const Hyper& h);

/// Glorot-uniform kernels, zero biases; Koopman A = I + U(+-1e-3), B = U(+-1e-3).
ModelParams init_model(const Hyper& h, std::uint64_t seed);

/// Throws ShapeError naming the first parameter that is missing or mis-shaped
/// with respect to `expected`.
void check_layout(const ParamSet& params, const Hyper& expected);

// ---- graph builders (batched) ---------------------------------------------------

namespace net {
/// x (N, 2, ny, nx) -> z (N, n_z)
Var encode(Graph& g, const Hyper& h, Var x);
/// z (N, n_z) -> x (N, 2, ny, nx), sigmoid output
Var decode(Graph& g, const Hyper& h, Var z);
/// z (N, n_z) -> phi (N, n_z + n_l) = [z, enc(z)]
Var lift(Graph& g, const Hyper& h, Var z);
/// phi (N, m), u (N, n_u) -> phi A^T + u B^T
Var koopman_step(Graph& g, Var phi, Var u);
/// z (N, n_z), u (N, n_u) -> A(z) z + B(z) u with A(z) = I + dA(z)
Var e2c_transition(Graph& g, const Hyper& h, Var z, Var u);
}  // namespace net

// ---- single-sample API ------------------------------------------------------------

using LatentState = std::vector<double>;

/// phi = [z, l]; construction checks the z prefix.
class LiftedState {
 public:
  LiftedState(std::span<const double> z, std::span<const double> l);
  static LiftedState from_vector(std::vector<double> phi, std::size_t n_z);
  std::span<const double> phi() const { return phi_; }
  std::span<const double> z() const { return std::span<const double>(phi_).first(n_z_); }
  std::size_t n_z() const { return n_z_; }

 private:
  LiftedState() = default;
  std::vector<double> phi_;
  std::size_t n_z_ = 0;
};

struct KoopmanMatrices {
  Tensor A;  // (m, m)
  Tensor B;  // (m, n_u)
};

KoopmanMatrices koopman_matrices(const ModelParams& m);

LatentState encode(const ModelParams& m, std::span<const double> x);
std::vector<double> decode(const ModelParams& m, std::span<const double> z);
LiftedState lift(const ModelParams& m, std::span<const double> z);

std::vector<double> koopman_step(const KoopmanMatrices& k, std::span<const double> phi,
                                 std::span<const double> u);
/// Phi_{t+1}..Phi_{t+p}; `controls` must hold at least p vectors.
std::vector<std::vector<double>> koopman_rollout(const KoopmanMatrices& k, std::span<const double> phi,
                                                 std::span<const std::vector<double>> controls,
                                                 std::size_t p);

LatentState e2c_transition(const ModelParams& m, std::span<const double> z, std::span<const double> u);

enum class PredictMode { linear_rollout, reencode_every_k };

/// Predicted normalized states x_{t+1}..x_{t+p} from x_t and controls
/// u_t..u_{t+p-1}. e2c models always chain their latent transition.
std::vector<std::vector<double>> predict_states(const ModelParams& m, std::span<const double> x_t,
                                                std::span<const std::vector<double>> controls,
                                                std::size_t p,
                                                PredictMode mode = PredictMode::linear_rollout);

// ---- checkpoint ----------------------------------------------------------------------

std::vector<char> encode_checkpoint(const ModelParams& m, const data::NormStats& stats);
void save_checkpoint(const std::string& path, const ModelParams& m, const data::NormStats& stats);

struct Checkpoint {
  ModelParams model;
  data::NormStats stats;
};

Checkpoint decode_checkpoint(std::span<const char> bytes, const std::string& what = "checkpoint");
Checkpoint load_checkpoint(const std::string& path);

}  // namespace krom::model
