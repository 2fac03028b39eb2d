#pragma once

#include <cstddef>
#include <span>

namespace krom::kernels {

/// Geometry of a 2-D convolution over an NCHW batch with an OCHW kernel.
struct ConvGeom {
  std::size_t n = 1;       // batch
  std::size_t c = 1;       // input channels
  std::size_t h = 1, w = 1;  // input spatial extent
  std::size_t o = 1;       // output channels
  std::size_t kh = 1, kw = 1;
  std::size_t stride = 1;
  std::size_t pad = 0;
  std::size_t ho = 1, wo = 1;  // output spatial extent

  /// Fills ho/wo from the other fields. Returns false if the kernel does not fit.
  bool infer_output();
  std::size_t in_size() const { return n * c * h * w; }
  std::size_t out_size() const { return n * o * ho * wo; }
  std::size_t weight_size() const { return o * c * kh * kw; }
};

// Both namespaces expose the same kernels. `serial` is a direct-loop reference
// kept for tests and benchmarks; `parallel` lowers convolutions to
// im2col + GEMM with OpenMP loops around the data movement.

namespace serial {

/// C = alpha * op(A) * op(B) + beta * C, row-major. op(A) is m x k, op(B) is k x n.
void gemm(bool trans_a, bool trans_b, std::size_t m, std::size_t n, std::size_t k,
          double alpha, std::span<const double> a, std::span<const double> b,
          double beta, std::span<double> c);

void conv2d_forward(const ConvGeom& g, std::span<const double> x,
                    std::span<const double> w, std::span<double> y);
void conv2d_backward_input(const ConvGeom& g, std::span<const double> dy,
                           std::span<const double> w, std::span<double> dx);
void conv2d_backward_weight(const ConvGeom& g, std::span<const double> x,
                            std::span<const double> dy, std::span<double> dw);

}  // namespace serial

namespace parallel {

void gemm(bool trans_a, bool trans_b, std::size_t m, std::size_t n, std::size_t k,
          double alpha, std::span<const double> a, std::span<const double> b,
          double beta, std::span<double> c);

void conv2d_forward(const ConvGeom& g, std::span<const double> x,
                    std::span<const double> w, std::span<double> y);
void conv2d_backward_input(const ConvGeom& g, std::span<const double> dy,
                           std::span<const double> w, std::span<double> dx);
void conv2d_backward_weight(const ConvGeom& g, std::span<const double> x,
                            std::span<const double> dy, std::span<double> dw);

}  // namespace parallel

}  // namespace krom::kernels
