#include "jetlab/minimal_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "jetlab/errors.hpp"

namespace jetlab {

namespace {

constexpr double kCircleMatchTol = 1e-9;

RationalFn rational_constant(long re, long im = 0) {
  return RationalFn::from_poly(Poly::constant(CRat(re, im)));
}

std::complex<double> complex_det(std::vector<std::vector<std::complex<double>>> m) {
  size_t n = m.size();
  std::complex<double> det = 1.0;
  for (size_t col = 0; col < n; ++col) {
    size_t pivot = col;
    for (size_t row = col + 1; row < n; ++row)
      if (std::abs(m[row][col]) > std::abs(m[pivot][col])) pivot = row;
    if (std::abs(m[pivot][col]) == 0.0) return 0.0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (size_t row = col + 1; row < n; ++row) {
      std::complex<double> factor = m[row][col] / m[col][col];
      for (size_t j = col; j < n; ++j) m[row][j] -= factor * m[col][j];
    }
  }
  return det;
}

}  // namespace

bool verify_conformality(const WeierstrassSurface& s) {
  if (s.phi.empty()) return false;
  RationalFn sum;
  for (const auto& p : s.phi) sum = sum + p * p;
  bool any_nonzero = std::any_of(s.phi.begin(), s.phi.end(),
                                 [](const RationalFn& p) { return !p.is_zero(); });
  return any_nonzero && sum.is_zero();
}

WeierstrassSurface plane_surface() {
  WeierstrassSurface s;
  s.n = 3;
  s.phi = {rational_constant(1), rational_constant(0, 1), rational_constant(0)};
  return s;
}

WeierstrassSurface enneper_surface() {
  // phi = ((1-z^2)/2, i(1+z^2)/2, z)
  Poly z = Poly::monomial(CRat{1}, 1);
  Poly one = Poly::constant(CRat{1});
  Poly half = Poly::constant(CRat{Rational(1, 2)});
  Poly half_i = Poly::constant(CRat{Rational(0), Rational(1, 2)});
  WeierstrassSurface s;
  s.n = 3;
  s.phi = {RationalFn::from_poly(half * (one - z * z)),
           RationalFn::from_poly(half_i * (one + z * z)), RationalFn::from_poly(z)};
  return s;
}

WeierstrassSurface weierstrass_surface(const RationalFn& f, const RationalFn& g,
                                       double admissible_radius) {
  RationalFn one = rational_constant(1);
  RationalFn half(Poly::constant(CRat{Rational(1, 2)}), Poly::constant(CRat{1}));
  RationalFn half_i(Poly::constant(CRat{Rational(0), Rational(1, 2)}), Poly::constant(CRat{1}));
  WeierstrassSurface s;
  s.n = 3;
  s.admissible_radius = admissible_radius;
  s.phi = {half * f * (one - g * g), half_i * f * (one + g * g), f * g};
  return s;
}

ProjectiveCurve gauss_map(const WeierstrassSurface& s) {
  if (!verify_conformality(s))
    throw DomainError("gauss_map: Weierstrass data is not conformal");
  return ProjectiveCurve::from_rational(s.phi, s.admissible_radius);
}

namespace {

double chart_residual(const ProjectiveCurve& g, const std::complex<double>& z, double step,
                      int conjugated) {
  const auto& comps = g.components();
  auto value = [&](int i, const std::complex<double>& w) {
    std::complex<double> v = comps[static_cast<size_t>(i)].eval(w);
    return i == conjugated ? std::conj(v) : v;
  };

  // pivot: largest component at z keeps the chart well-conditioned
  int pivot = 0;
  double best = -1.0;
  for (int i = 0; i < static_cast<int>(comps.size()); ++i) {
    double a = std::abs(value(i, z));
    if (a > best) {
      best = a;
      pivot = i;
    }
  }
  if (best < 1e-13)
    throw DomainError("holomorphy_residual: sample at an indeterminacy point");

  double residual = 0.0;
  const std::complex<double> eps(step, 0.0);
  const std::complex<double> ieps(0.0, step);
  for (int i = 0; i < static_cast<int>(comps.size()); ++i) {
    if (i == pivot) continue;
    auto chart = [&](const std::complex<double>& w) { return value(i, w) / value(pivot, w); };
    std::complex<double> du = (chart(z + eps) - chart(z - eps)) / (2.0 * step);
    std::complex<double> dv = (chart(z + ieps) - chart(z - ieps)) / (2.0 * step);
    std::complex<double> dbar = 0.5 * (du + std::complex<double>(0.0, 1.0) * dv);
    residual = std::max(residual, std::abs(dbar));
  }
  return residual;
}

}  // namespace

double holomorphy_residual(const ProjectiveCurve& g,
                           const std::vector<std::complex<double>>& samples, double step) {
  double r = 0.0;
  for (const auto& z : samples) r = std::max(r, chart_residual(g, z, step, -1));
  return r;
}

double holomorphy_residual_conjugated(const ProjectiveCurve& g, int conjugated_component,
                                      const std::vector<std::complex<double>>& samples,
                                      double step) {
  if (conjugated_component < 0 || conjugated_component > g.dimension())
    throw DomainError("holomorphy_residual_conjugated: component out of range");
  double r = 0.0;
  for (const auto& z : samples)
    r = std::max(r, chart_residual(g, z, step, conjugated_component));
  return r;
}

double area_form_density(const WeierstrassSurface& s, const std::complex<double>& z,
                         NormKind norm) {
  double acc = 0.0;
  for (const auto& p : s.phi) {
    double a = std::abs(p.eval(z));
    if (norm == NormKind::Euclidean)
      acc += a * a;
    else
      acc = std::max(acc, a);
  }
  return norm == NormKind::Euclidean ? 2.0 * acc : 2.0 * acc * acc;
}

std::vector<double> yau_partial_integrals(double p_exponent, HModel h,
                                          const std::vector<double>& eps_grid,
                                          const QuadratureOptions& opts) {
  if (!(p_exponent > 0.0))
    throw DomainError("yau_partial_integrals: exponent must be positive");
  for (double eps : eps_grid)
    if (!(eps > 0.0 && eps < 1.0)) throw DomainError("yau_partial_integrals: eps outside (0,1)");

  WeierstrassSurface plane = plane_surface();
  QuadratureOptions outer = opts;
  outer.mode = ExecMode::Serial;
  // the circle integrals nest inside every radial node: let them ladder up
  // from a coarse grid and hold a tighter tolerance than the radial rule
  QuadratureOptions inner = outer;
  inner.min_nodes_log2 = 6;
  inner.tolerance = 0.1 * opts.tolerance;

  auto ring_value = [&](double r) {
    auto integrand = [&](double theta) {
      std::complex<double> z = std::polar(r, theta);
      double hv = (h == HModel::One) ? 1.0 : 1.0 / std::abs(1.0 - z);
      return std::pow(hv, p_exponent) * area_form_density(plane, z, NormKind::Euclidean);
    };
    return r * circle_integral(integrand, inner).value;
  };

  return sweep(
      static_cast<int>(eps_grid.size()),
      [&](int i) {
        double upper = 1.0 - eps_grid[static_cast<size_t>(i)];
        return segment_integral(ring_value, 0.0, upper, outer).value;
      },
      opts.mode);
}

ProofIntegral proof_integral_convergence(double ratio, const std::vector<double>& eps_grid,
                                         const QuadratureOptions& opts) {
  if (!(ratio > 0.0)) throw DomainError("proof_integral_convergence: ratio must be positive");
  if (eps_grid.empty()) throw DomainError("proof_integral_convergence: empty grid");
  for (size_t i = 0; i < eps_grid.size(); ++i) {
    if (!(eps_grid[i] > 0.0 && eps_grid[i] < 1.0))
      throw DomainError("proof_integral_convergence: eps outside (0,1)");
    if (i > 0 && eps_grid[i] >= eps_grid[i - 1])
      throw DomainError("proof_integral_convergence: grid must decrease toward 0");
  }

  // substitute r = 1 - e^{-s}: integrand r (1-r)^(-ratio) log(1/(1-r))^ratio dr
  // becomes (1 - e^{-s}) e^{-(1-ratio) s} s^ratio ds on [0, log(1/eps)]
  auto integrand = [&](double s) {
    return (1.0 - std::exp(-s)) * std::exp(-(1.0 - ratio) * s) * std::pow(s, ratio);
  };

  QuadratureOptions inner = opts;
  inner.mode = ExecMode::Serial;
  inner.tolerance = std::min(opts.tolerance, 1e-6);

  ProofIntegral out;
  out.partial_values = sweep(
      static_cast<int>(eps_grid.size()),
      [&](int i) {
        double s_max = std::log(1.0 / eps_grid[static_cast<size_t>(i)]);
        return segment_integral(integrand, 0.0, s_max, inner).value;
      },
      opts.mode);

  // verdict from an internal decade ladder, independent of the user grid
  constexpr int kDecades = 10;
  constexpr double kDivergenceBound = 1e4;
  std::vector<double> increments;
  double first = segment_integral(integrand, 0.0, std::log(10.0), inner).value;
  double partial = first;
  bool exceeded = partial > kDivergenceBound;
  for (int i = 1; i < kDecades; ++i) {
    double lo = i * std::log(10.0);
    double hi = (i + 1) * std::log(10.0);
    double delta = segment_integral(integrand, lo, hi, inner).value;
    increments.push_back(delta);
    partial += delta;
    if (partial > kDivergenceBound) exceeded = true;
  }

  double last = increments.back();
  double prev = increments[increments.size() - 2];
  bool geometric = prev > 0.0 && last / prev <= 0.95;
  if (!exceeded && geometric) {
    out.verdict = ProofIntegral::Verdict::Converging;
    double q = last / prev;
    out.tail_bound = last * q / (1.0 - q);
  } else {
    out.verdict = ProofIntegral::Verdict::Diverging;
    out.tail_bound = 0.0;
  }
  return out;
}

std::vector<double> jet_norm_circle_ratios(const WronskianDifferential& w,
                                           const ProjectiveCurve& f,
                                           const std::vector<double>& r_grid,
                                           const QuadratureOptions& opts) {
  int n = w.arrangement.n;
  if (f.dimension() != n)
    throw DomainError("jet_norm_circle_ratios: curve dimension must match the arrangement");
  int m = w.weight;
  int mt = w.vanishing_order;
  if (mt <= 2 * m)
    throw DomainError("jet_norm_circle_ratios: twist condition m~ > 2m fails");

  // affine chart x_b = f_b / f_0 and its derivatives to order n
  std::vector<std::vector<RationalFn>> deriv(static_cast<size_t>(n));
  for (int b = 1; b <= n; ++b) {
    RationalFn x(f.components()[static_cast<size_t>(b)], f.components()[0]);
    auto& row = deriv[static_cast<size_t>(b - 1)];
    RationalFn cur = x;
    for (int a = 1; a <= n; ++a) {
      cur = cur.derivative();
      row.push_back(cur);
    }
  }

  // the forms along the curve, exact; their zeros are the singular radii
  std::vector<RationalFn> forms_along;
  std::vector<double> bad_radii;
  for (const auto& form : w.arrangement.forms) {
    RationalFn g = RationalFn::from_poly(Poly::constant(CRat{form[0]}));
    for (int b = 1; b <= n; ++b)
      g = g + RationalFn(Poly::constant(CRat{form[static_cast<size_t>(b)]}), Poly::constant(CRat{1})) *
                  RationalFn(f.components()[static_cast<size_t>(b)], f.components()[0]);
    if (g.is_zero())
      throw ContainmentError("jet_norm_circle_ratios: curve lies in a hyperplane of the family");
    for (const auto& root : roots_with_multiplicity(g.num()))
      bad_radii.push_back(std::abs(root.location));
    forms_along.push_back(std::move(g));
  }
  if (f.components()[0].degree() > 0)
    for (const auto& root : roots_with_multiplicity(f.components()[0]))
      bad_radii.push_back(std::abs(root.location));

  double exponent = 2.0 / mt;
  double bound_exp = 2.0 * m / static_cast<double>(mt);

  QuadratureOptions inner = opts;
  inner.mode = ExecMode::Serial;
  return sweep(
      static_cast<int>(r_grid.size()),
      [&](int i) {
        double r = r_grid[static_cast<size_t>(i)];
        if (!(r > 0.0 && r < 1.0)) throw DomainError("jet_norm_circle_ratios: r outside (0,1)");
        for (double b : bad_radii)
          if (std::abs(b - r) < kCircleMatchTol)
            throw SingularCircleError(
                "jet_norm_circle_ratios: curve meets a divisor point on the sampled circle");
        auto integrand = [&](double theta) {
          std::complex<double> z = std::polar(r, theta);
          std::vector<std::vector<std::complex<double>>> mat(
              static_cast<size_t>(n), std::vector<std::complex<double>>(static_cast<size_t>(n)));
          for (int a = 1; a <= n; ++a)
            for (int b = 1; b <= n; ++b)
              mat[static_cast<size_t>(a - 1)][static_cast<size_t>(b - 1)] =
                  deriv[static_cast<size_t>(b - 1)][static_cast<size_t>(a - 1)].eval(z);
          std::complex<double> numer = complex_det(mat);
          std::complex<double> denom = 1.0;
          for (const auto& g : forms_along) denom *= g.eval(z);
          double norm = f.sup_norm(z);
          return std::pow(std::abs(numer / denom), exponent) * norm * norm;
        };
        double integral = circle_integral(integrand, inner).value;
        return integral * std::pow(1.0 - r, bound_exp) /
               std::pow(std::log(1.0 / (1.0 - r)), bound_exp);
      },
      opts.mode);
}

}  // namespace jetlab
