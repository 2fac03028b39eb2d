#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "krom/numerics/tensor.hpp"

namespace krom {

/// Handle to a node of a Graph.
struct Var {
  int id = -1;
  bool valid() const { return id >= 0; }
};

/// Define-by-run computation tape with reverse-mode differentiation.
///
/// Every op computes its value eagerly and records how to push gradients back
/// to its inputs. Parameters are read from the ParamSet given at construction
/// and are never mutated; a Graph is built, differentiated once and discarded.
///
/// Rank conventions: dense activations are (N, F); images are (N, C, H, W);
/// dense weights are (out, in) and act as x * W^T.
class Graph {
 public:
  explicit Graph(const ParamSet& params) : params_(&params) {}

  Graph(const Graph&) = delete;
  Graph& operator=(const Graph&) = delete;

  Var constant(Tensor t);
  Var param(std::string_view name);

  const Tensor& value(Var v) const;
  const Shape& shape(Var v) const { return value(v).shape(); }
  std::size_t num_nodes() const { return nodes_.size(); }

  // Linear algebra
  Var matmul(Var a, Var b);     // (m,k) x (k,n)
  Var matmul_nt(Var a, Var b);  // (m,k) x (n,k)^T
  /// Rows of m are (r x c) matrices stored flat: m (N, r*c), v (N, c) -> (N, r).
  Var batched_matvec(Var m, Var v, std::size_t rows);
  /// x * W^T + b with W (out, in), b (out).
  Var dense(Var x, Var w, Var b);

  // Elementwise
  Var add(Var a, Var b);
  Var sub(Var a, Var b);
  Var scale(Var a, double s);
  /// Adds b (extent x.dim(1)) along axis 1 of x.
  Var add_bias(Var x, Var b);
  Var tanh(Var x);
  Var relu(Var x);
  Var sigmoid(Var x);

  // Convolutions (zero padding)
  /// x (N,C,H,W), w (O,C,kh,kw) -> (N,O,Ho,Wo)
  Var conv2d(Var x, Var w, std::size_t stride, std::size_t pad);
  /// x (N,Cin,H,W), w (Cin,Cout,kh,kw) -> (N,Cout,(H-1)s-2p+kh+out_pad, ...)
  Var conv_transpose2d(Var x, Var w, std::size_t stride, std::size_t pad,
                       std::size_t out_pad);

  // Structural
  Var concat(std::span<const Var> parts, std::size_t axis);
  Var slice(Var x, std::size_t axis, std::size_t begin, std::size_t end);
  Var reshape(Var x, Shape shape);

  // Reductions (all return shape (1))
  Var mean_square(Var x);
  Var mse(Var a, Var b) { return mean_square(sub(a, b)); }
  Var sum(std::span<const Var> scalars);

  /// Reverse sweep from a single-element node.
  void backward(Var out);

  /// Gradients of every parameter in the ParamSet (zeros if unreachable).
  /// Only valid after backward().
  GradRecord param_grads() const;

  /// When enabled, relu records which side of zero each input lies on.
  /// Two graphs with equal signatures took the same linear piece everywhere.
  void track_kinks(bool on) { track_kinks_ = on; }
  std::uint64_t kink_signature() const { return kink_sig_; }

 private:
  struct Node {
    std::string op;
    Tensor value;
    std::vector<int> inputs;
    bool needs_grad = false;
    std::string param_name;  // non-empty for param leaves
    std::function<void(Graph&, const Node&, const Tensor& grad)> backward;
  };

  Var push(std::string op, Tensor value, std::vector<int> inputs,
           std::function<void(Graph&, const Node&, const Tensor&)> bw);
  [[noreturn]] void shape_fail(std::string_view op, const std::string& msg) const;
  const Node& node(Var v) const;
  Tensor& grad_of(int id);
  void add_grad(int id, std::vector<double>&& g);
  bool needs(int id) const { return nodes_[static_cast<std::size_t>(id)].needs_grad; }

  const ParamSet* params_;
  bool track_kinks_ = false;
  std::uint64_t kink_sig_ = 0xcbf29ce484222325ull;
  std::vector<Node> nodes_;
  std::vector<Tensor> grads_;
};

/// Builds a graph from input handles and returns output handles.
using GraphFn = std::function<std::vector<Var>(Graph&, std::span<const Var>)>;

/// Evaluates a graph description. Throws NonFiniteError if any output has NaN/Inf.
std::vector<Tensor> forward_eval(const GraphFn& fn, const std::vector<Tensor>& inputs,
                                 const ParamSet& params);

/// d(outputs[output_index]) / d(params). The selected output must be scalar.
GradRecord backward_grad(const GraphFn& fn, const std::vector<Tensor>& inputs,
                         const ParamSet& params, std::size_t output_index);

}  // namespace krom
