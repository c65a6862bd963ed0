// Benchmark: serial reference kernel vs the OpenMP kernel on the circle
// quadratures that dominate every sweep. Values must agree bit-for-bit.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>

#include <omp.h>

#include "jetlab/quadrature.hpp"

using namespace jetlab;

namespace {

double time_ms(const std::function<double()>& body, int repeats, double* value) {
  // one warmup, then best of `repeats`
  *value = body();
  double best = 1e300;
  for (int i = 0; i < repeats; ++i) {
    auto t0 = std::chrono::steady_clock::now();
    double v = body();
    auto t1 = std::chrono::steady_clock::now();
    if (v != *value) std::printf("  MISMATCH: %.17g vs %.17g\n", v, *value);
    best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
  }
  return best;
}

}  // namespace

int main() {
  std::printf("threads available: %d\n\n", omp_get_max_threads());

  struct Case {
    const char* name;
    std::function<double(double)> integrand;
  };
  const double r = 0.9;
  Case cases[] = {
      {"proximity-type: log |1 - 2 z^2| on |z| = 0.9",
       [r](double theta) {
         std::complex<double> z = std::polar(r, theta);
         return std::log(std::abs(1.0 - 2.0 * z * z));
       }},
      {"jet-norm-type: |1/((z-2)(z+2)(z-3))|^(2/3) max(1,|z|)^2",
       [r](double theta) {
         std::complex<double> z = std::polar(r, theta);
         double q = std::abs(1.0 / ((z - 2.0) * (z + 2.0) * (z - 3.0)));
         double m = std::max(1.0, std::abs(z));
         return std::pow(q, 2.0 / 3.0) * m * m;
       }},
  };

  QuadratureOptions serial;
  serial.mode = ExecMode::Serial;
  serial.min_nodes_log2 = 16;  // fixed-depth ladder makes timings comparable
  serial.tolerance = 1e-12;
  QuadratureOptions parallel = serial;
  parallel.mode = ExecMode::Parallel;

  std::printf("%-55s %12s %12s %9s\n", "integrand", "serial ms", "parallel ms", "speedup");
  for (const auto& c : cases) {
    double vs = 0, vp = 0;
    double ts = time_ms([&] { return circle_integral(c.integrand, serial).value; }, 5, &vs);
    double tp = time_ms([&] { return circle_integral(c.integrand, parallel).value; }, 5, &vp);
    std::printf("%-55s %12.3f %12.3f %8.2fx  %s\n", c.name, ts, tp, ts / tp,
                vs == vp ? "bit-identical" : "VALUES DIFFER");
  }

  // raw kernel throughput without the adaptive ladder
  auto heavy = [](int i) {
    double x = 1e-6 * i;
    return std::exp(std::sin(x)) / (1.0 + x * x);
  };
  double vs = 0, vp = 0;
  double ts = time_ms([&] { return indexed_sum(1 << 22, heavy, ExecMode::Serial); }, 5, &vs);
  double tp = time_ms([&] { return indexed_sum(1 << 22, heavy, ExecMode::Parallel); }, 5, &vp);
  std::printf("%-55s %12.3f %12.3f %8.2fx  %s\n", "raw chunked sum, 2^22 terms", ts, tp, ts / tp,
              vs == vp ? "bit-identical" : "VALUES DIFFER");
  return 0;
}
