#include "jetlab/quadrature.hpp"

#include <cmath>
#include <exception>
#include <numbers>

#include "jetlab/errors.hpp"

namespace jetlab {

namespace {

constexpr int kChunk = 4096;

// 16-point Gauss-Legendre abscissae/weights on [-1, 1].
constexpr double kGlNode[16] = {
    -0.9894009349916499, -0.9445750230732326, -0.8656312023878318, -0.7554044083550030,
    -0.6178762444026438, -0.4580167776572274, -0.2816035507792589, -0.0950125098376374,
    0.0950125098376374,  0.2816035507792589,  0.4580167776572274,  0.6178762444026438,
    0.7554044083550030,  0.8656312023878318,  0.9445750230732326,  0.9894009349916499};
constexpr double kGlWeight[16] = {
    0.0271524594117541, 0.0622535239386479, 0.0951585116824928, 0.1246289712555339,
    0.1495959888165767, 0.1691565193950025, 0.1826034150449236, 0.1894506104550685,
    0.1894506104550685, 0.1826034150449236, 0.1691565193950025, 0.1495959888165767,
    0.1246289712555339, 0.0951585116824928, 0.0622535239386479, 0.0271524594117541};

struct SumOutcome {
  double value = 0.0;
  bool finite = true;
};

// Chunked accumulation shared by both execution modes. The serial and
// parallel paths run the identical per-chunk loop; only the distribution of
// chunks over threads differs, and the final reduction is in chunk order
// either way.
SumOutcome chunked_sum(int n, const std::function<double(int)>& f, ExecMode mode) {
  int chunks = (n + kChunk - 1) / kChunk;
  std::vector<double> partial(static_cast<size_t>(chunks), 0.0);
  bool finite = true;
  std::exception_ptr error;

  auto run_chunk = [&](int c) {
    int begin = c * kChunk;
    int end = std::min(n, begin + kChunk);
    double acc = 0.0;
    for (int i = begin; i < end; ++i) acc += f(i);
    partial[static_cast<size_t>(c)] = acc;
  };

  if (mode == ExecMode::Parallel) {
#pragma omp parallel for schedule(static)
    for (int c = 0; c < chunks; ++c) {
      try {
        run_chunk(c);
      } catch (...) {
#pragma omp critical
        if (!error) error = std::current_exception();
      }
    }
  } else {
    for (int c = 0; c < chunks; ++c) run_chunk(c);
  }
  if (error) std::rethrow_exception(error);

  double total = 0.0;
  for (int c = 0; c < chunks; ++c) {
    if (!std::isfinite(partial[static_cast<size_t>(c)])) finite = false;
    total += partial[static_cast<size_t>(c)];
  }
  return {total, finite};
}

}  // namespace

double indexed_sum(int n, const std::function<double(int)>& f, ExecMode mode) {
  return chunked_sum(n, f, mode).value;
}

QuadratureResult circle_integral(const std::function<double(double)>& f,
                                 const QuadratureOptions& opts) {
  const double two_pi = 2.0 * std::numbers::pi;
  double offset = 0.0;
  bool shifted = false;

  auto level_value = [&](int n) {
    double h = two_pi / n;
    return chunked_sum(
        n, [&](int i) { return f(h * (i + offset)); }, opts.mode);
  };

  QuadratureResult res;
  double prev = 0.0;
  bool have_prev = false;
  for (int lg = opts.min_nodes_log2; lg <= opts.max_nodes_log2; ++lg) {
    int n = 1 << lg;
    SumOutcome s = level_value(n);
    if (!s.finite) {
      if (shifted)
        throw SingularCircleError("circle_integral: non-finite integrand persists after grid shift");
      // half-step shift off the detected singularity, restart the ladder
      offset = 0.5;
      shifted = true;
      lg = opts.min_nodes_log2 - 1;
      have_prev = false;
      continue;
    }
    double value = s.value * two_pi / n;
    if (have_prev && std::abs(value - prev) <= opts.tolerance * std::max(1.0, std::abs(value))) {
      res.value = value;
      res.nodes = n;
      res.converged = true;
      res.grid_shifted = shifted;
      return res;
    }
    prev = value;
    have_prev = true;
  }
  throw ConvergenceError("circle_integral: node cap reached before tolerance");
}

QuadratureResult segment_integral(const std::function<double(double)>& f, double a, double b,
                                  const QuadratureOptions& opts) {
  if (!(b >= a)) throw DomainError("segment_integral: b < a");
  QuadratureResult res;
  double prev = 0.0;
  bool have_prev = false;
  for (int panels = 4; panels <= (1 << opts.max_nodes_log2) / 16; panels *= 2) {
    double h = (b - a) / panels;
    int n = panels * 16;
    double value = h / 2.0 *
                   indexed_sum(
                       n,
                       [&](int i) {
                         int p = i / 16;
                         int g = i % 16;
                         double mid = a + (p + 0.5) * h;
                         return kGlWeight[g] * f(mid + kGlNode[g] * h / 2.0);
                       },
                       opts.mode);
    if (!std::isfinite(value))
      throw SingularCircleError("segment_integral: non-finite integrand");
    if (have_prev && std::abs(value - prev) <= opts.tolerance * std::max(1.0, std::abs(value))) {
      res.value = value;
      res.nodes = n;
      res.converged = true;
      return res;
    }
    prev = value;
    have_prev = true;
  }
  throw ConvergenceError("segment_integral: panel cap reached before tolerance");
}

std::vector<double> sweep(int n, const std::function<double(int)>& f, ExecMode mode) {
  std::vector<double> out(static_cast<size_t>(n), 0.0);
  std::exception_ptr error;
  if (mode == ExecMode::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < n; ++i) {
      try {
        out[static_cast<size_t>(i)] = f(i);
      } catch (...) {
#pragma omp critical
        if (!error) error = std::current_exception();
      }
    }
  } else {
    for (int i = 0; i < n; ++i) out[static_cast<size_t>(i)] = f(i);
  }
  if (error) std::rethrow_exception(error);
  return out;
}

}  // namespace jetlab
