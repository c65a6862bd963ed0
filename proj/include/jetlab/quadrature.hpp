#ifndef JETLAB_QUADRATURE_HPP
#define JETLAB_QUADRATURE_HPP

#include <functional>
#include <vector>

namespace jetlab {

// Execution mode of the data-parallel kernels. Serial is the reference
// implementation; Parallel distributes the same fixed-size chunks over
// OpenMP threads. Both accumulate per chunk in index order and reduce the
// chunk partials in chunk order, so the two modes are bit-identical.
enum class ExecMode { Serial, Parallel };

struct QuadratureOptions {
  // Cauchy criterion between successive refinement levels, taken relative
  // to max(1, |integral|): large integrals cannot beat double rounding on
  // an absolute scale.
  double tolerance = 1e-8;
  int min_nodes_log2 = 12;
  int max_nodes_log2 = 18;
  ExecMode mode = ExecMode::Parallel;
};

struct QuadratureResult {
  double value = 0.0;
  int nodes = 0;
  bool converged = false;
  bool grid_shifted = false;  // half-step offset applied around a detected singularity
};

// Integral of f over [0, 2pi) by the periodic trapezoid rule (equivalently
// the uniform Riemann sum), doubling the node count until two successive
// levels agree within the tolerance. A node hitting a non-finite value
// (log of a zero on the circle, a pole) triggers one retry with the grid
// shifted half a step. Throws ConvergenceError if the node cap is reached
// without the Cauchy criterion holding.
QuadratureResult circle_integral(const std::function<double(double)>& f,
                                 const QuadratureOptions& opts = {});

// Integral of f over [a, b] by composite 16-point Gauss-Legendre panels,
// doubling the panel count until the Cauchy criterion holds.
QuadratureResult segment_integral(const std::function<double(double)>& f, double a, double b,
                                  const QuadratureOptions& opts = {});

// Deterministic chunked sum of f(i) for i in [0, n): fixed chunk size,
// per-chunk serial accumulation, in-order reduction of chunk partials.
double indexed_sum(int n, const std::function<double(int)>& f, ExecMode mode);

// Evaluates f on every index of a grid, in parallel when requested. Each
// slot is computed independently, so results are identical to the serial
// order. Exceptions are captured and rethrown after the loop completes.
std::vector<double> sweep(int n, const std::function<double(int)>& f, ExecMode mode);

}  // namespace jetlab

#endif
