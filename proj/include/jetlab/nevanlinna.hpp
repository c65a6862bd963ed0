#ifndef JETLAB_NEVANLINNA_HPP
#define JETLAB_NEVANLINNA_HPP

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "jetlab/germ.hpp"
#include "jetlab/polynomial.hpp"
#include "jetlab/quadrature.hpp"

namespace jetlab {

// Finite divisor on the unit disc. Support points are distinct, nonzero and
// inside the open disc; the origin has its own multiplicity slot so the
// counting function's origin correction stays explicit.
struct DiscDivisor {
  struct Point {
    std::complex<double> location;
    int multiplicity;
  };
  std::vector<Point> support;
  int origin_multiplicity = 0;

  void validate() const;
  int total_degree() const;
};

DiscDivisor operator+(const DiscDivisor& a, const DiscDivisor& b);

// Truncation level: an integer k >= 1 or infinity (nullopt).
using TruncationLevel = std::optional<int>;

// n^[k](t, E): sum of min(k, multiplicity) over support inside the disc of
// radius t, the origin included.
int truncated_degree(const DiscDivisor& e, double t, TruncationLevel k = std::nullopt);

// N^[k](r, E) in closed form:
//   sum_{0<|a|<r} min(k, mult) log(r/|a|) + min(k, origin) log r.
// The origin term is the standard correction that keeps the integral form
// finite when the divisor charges 0.
double counting_function(const DiscDivisor& e, double r, TruncationLevel k = std::nullopt);

// Holomorphic curve Delta -> CP^n with polynomial components and exact
// coefficients, in reduced representation (no common zero in the closed disc
// of radius r_max). Rational components are admitted by clearing
// denominators.
class ProjectiveCurve {
 public:
  ProjectiveCurve(std::vector<Poly> components, double r_max);
  static ProjectiveCurve from_rational(const std::vector<RationalFn>& components, double r_max);

  int dimension() const { return static_cast<int>(components_.size()) - 1; }
  double r_max() const { return r_max_; }
  const std::vector<Poly>& components() const { return components_; }
  bool is_constant() const;

  // max_i |f_i(z)|
  double sup_norm(const std::complex<double>& z) const;

 private:
  std::vector<Poly> components_;
  double r_max_;
};

// Hypersurface D = {Q = 0} in CP^n: homogeneous polynomial in z_0..z_n with
// exact coefficients. Homogeneity is checked exactly; the norm is the
// maximum coefficient modulus, as in the proximity function's definition.
class Hypersurface {
 public:
  struct Term {
    std::vector<int> exponents;  // length n+1
    CRat coeff;
  };

  Hypersurface(int ambient_dim, std::vector<Term> terms);

  int ambient_dimension() const { return nvars_ - 1; }
  int degree() const { return degree_; }
  double coefficient_norm() const { return norm_; }
  const std::vector<Term>& terms() const { return terms_; }

  // Q(f_0(z),...,f_n(z)) as an exact univariate polynomial.
  Poly compose(const ProjectiveCurve& f) const;
  std::complex<double> eval(const std::vector<std::complex<double>>& z) const;

 private:
  int nvars_;
  int degree_;
  double norm_;
  std::vector<Term> terms_;
};

// Zero divisor of Q o f on |z| <= r_max. Multiplicities are exact via
// square-free factorization; locations are numeric. Throws ContainmentError
// when Q o f vanishes identically.
DiscDivisor divisor_of_pullback(const ProjectiveCurve& f, const Hypersurface& d, double r_max);

// m_f(r, D): circle average of log(|f|^d |Q| / |Q(f)|). Nonnegative up to
// quadrature tolerance. Throws SingularCircleError when Q o f has a zero on
// the sampled circle.
double proximity_function(const ProjectiveCurve& f, const Hypersurface& d, double r,
                          const QuadratureOptions& opts = {});

// Cartan order function T_f(r): circle average of log |f|.
double order_function(const ProjectiveCurve& f, double r, const QuadratureOptions& opts = {});

struct FmtRow {
  double r;
  double proximity;
  double counting;
  double order;
  double defect;  // m + N - d*T
};

// First Main Theorem sweep: the defect column differs from a constant by
// quadrature error only.
std::vector<FmtRow> fmt_sweep(const ProjectiveCurve& f, const Hypersurface& d,
                              const std::vector<double>& r_grid,
                              const QuadratureOptions& opts = {});

std::vector<double> fmt_defect(const ProjectiveCurve& f, const Hypersurface& d,
                               const std::vector<double>& r_grid,
                               const QuadratureOptions& opts = {});

// T_f(r) / log(1/(1-r)) on a grid increasing toward 1. Samples the
// transcendence criterion's limsup; it cannot decide it.
std::vector<double> transcendence_ratio(const ProjectiveCurve& f,
                                        const std::vector<double>& r_grid,
                                        const QuadratureOptions& opts = {});

// Germ-backed curve for transcendence sampling only: components evaluated
// from truncated series within their validity radius.
struct GermCurve {
  std::vector<FloatGerm> components;
  double admissible_radius() const;
};
std::vector<double> transcendence_ratio(const GermCurve& f, const std::vector<double>& r_grid,
                                        const QuadratureOptions& opts = {});

// Nowhere-zero holomorphic function on the disc, carried by its logarithmic
// derivative phi'/phi as an exact rational function. exp(z) has psi = 1; a
// rational phi has psi = N'/N - D'/D.
struct NowhereZeroFn {
  std::string name;
  RationalFn log_derivative;

  static NowhereZeroFn exponential();
  static NowhereZeroFn geometric();  // 1/(1-z)
  // Validates that phi has no zero or pole in |z| < r_max.
  static NowhereZeroFn from_rational(const RationalFn& phi, double r_max,
                                     const std::string& name = "");
};

// Logarithmic-derivative integral data (Fujimoto's estimate): for each r,
//   integral of |(d/dz)^(lambda-1) (phi'/phi)| over the circle, divided by
//   (1-r)^(-lambda) log(1/(1-r)).
std::vector<double> ldl_ratio(const NowhereZeroFn& phi, int lambda,
                              const std::vector<double>& r_grid,
                              const QuadratureOptions& opts = {});

// Product version: integral of |prod_j (phi_j'/phi_j)^(lambda_j - 1)|^t
// divided by (1-r)^(-s) (log 1/(1-r))^s with s = t * sum(lambda_j).
// Requires t * count < 1.
std::vector<double> ldl_product_ratio(const std::vector<NowhereZeroFn>& phis,
                                      const std::vector<int>& lambdas, double t,
                                      const std::vector<double>& r_grid,
                                      const QuadratureOptions& opts = {});

}  // namespace jetlab

#endif
