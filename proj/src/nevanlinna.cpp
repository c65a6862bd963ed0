#include "jetlab/nevanlinna.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "jetlab/errors.hpp"

namespace jetlab {

namespace {

constexpr double kCircleMatchTol = 1e-9;

void check_radius(double r) {
  if (!(r > 0.0 && r < 1.0)) throw DomainError("radius must lie in (0, 1)");
}

int truncate_mult(int mult, TruncationLevel k) {
  return k ? std::min(*k, mult) : mult;
}

}  // namespace

void DiscDivisor::validate() const {
  if (origin_multiplicity < 0) throw DomainError("divisor: negative origin multiplicity");
  for (size_t i = 0; i < support.size(); ++i) {
    const auto& p = support[i];
    if (p.multiplicity < 1) throw DomainError("divisor: multiplicities must be positive");
    double a = std::abs(p.location);
    if (a == 0.0 || a >= 1.0)
      throw DomainError("divisor: support must lie in the punctured open disc");
    for (size_t j = i + 1; j < support.size(); ++j)
      if (support[j].location == p.location)
        throw DomainError("divisor: support points must be distinct");
  }
}

int DiscDivisor::total_degree() const {
  int d = origin_multiplicity;
  for (const auto& p : support) d += p.multiplicity;
  return d;
}

DiscDivisor operator+(const DiscDivisor& a, const DiscDivisor& b) {
  DiscDivisor out = a;
  out.origin_multiplicity += b.origin_multiplicity;
  for (const auto& p : b.support) {
    auto it = std::find_if(out.support.begin(), out.support.end(),
                           [&](const DiscDivisor::Point& q) { return q.location == p.location; });
    if (it != out.support.end())
      it->multiplicity += p.multiplicity;
    else
      out.support.push_back(p);
  }
  return out;
}

int truncated_degree(const DiscDivisor& e, double t, TruncationLevel k) {
  if (!(t > 0.0 && t < 1.0)) throw DomainError("truncated_degree: t outside (0,1)");
  if (k && *k < 1) throw DomainError("truncated_degree: level must be >= 1");
  int acc = truncate_mult(e.origin_multiplicity, k);
  for (const auto& p : e.support)
    if (std::abs(p.location) < t) acc += truncate_mult(p.multiplicity, k);
  return acc;
}

double counting_function(const DiscDivisor& e, double r, TruncationLevel k) {
  check_radius(r);
  if (k && *k < 1) throw DomainError("counting_function: level must be >= 1");
  double acc = truncate_mult(e.origin_multiplicity, k) * std::log(r);
  for (const auto& p : e.support) {
    double a = std::abs(p.location);
    if (a < r) acc += truncate_mult(p.multiplicity, k) * std::log(r / a);
  }
  return acc;
}

ProjectiveCurve::ProjectiveCurve(std::vector<Poly> components, double r_max)
    : components_(std::move(components)), r_max_(r_max) {
  if (components_.size() < 2)
    throw DomainError("curve: need at least two homogeneous components");
  if (!(r_max_ > 0.0 && r_max_ < 1.0))
    throw DomainError("curve: admissible radius must lie in (0,1)");
  bool all_zero = std::all_of(components_.begin(), components_.end(),
                              [](const Poly& p) { return p.is_zero(); });
  if (all_zero) throw DomainError("curve: all components vanish identically");

  // reduced representation: no common zero up to r_max
  Poly g;
  for (const auto& c : components_) g = poly_gcd(g, c);
  if (g.degree() > 0) {
    for (const auto& root : roots_with_multiplicity(g))
      if (std::abs(root.location) <= r_max_ + 1e-12)
        throw DomainError("curve: representation is not reduced (common zero in the disc)");
  }
}

namespace {

// Scalar making all coefficients primitive integers: lcm of denominators
// over gcd of the resulting numerators.
CRat content_normalizer(const std::vector<Poly>& polys) {
  BigInt den_lcm = 1;
  for (const auto& p : polys)
    for (const auto& c : p.coefficients())
      for (const Rational* part : {&c.re, &c.im}) {
        if (*part == 0) continue;
        BigInt d = denominator(*part);
        den_lcm = den_lcm / gcd(den_lcm, d) * d;
      }
  BigInt num_gcd = 0;
  for (const auto& p : polys)
    for (const auto& c : p.coefficients())
      for (const Rational* part : {&c.re, &c.im}) {
        if (*part == 0) continue;
        BigInt scaled = numerator(*part) * (den_lcm / denominator(*part));
        num_gcd = gcd(num_gcd, abs(scaled));
      }
  if (num_gcd == 0) num_gcd = 1;
  return CRat{Rational(den_lcm, num_gcd)};
}

}  // namespace

ProjectiveCurve ProjectiveCurve::from_rational(const std::vector<RationalFn>& components,
                                               double r_max) {
  // clear denominators: multiply every component by the product of all
  // denominators, then strip the overall polynomial gcd and scalar content
  Poly common_den = Poly::constant(CRat{1});
  for (const auto& c : components) common_den = common_den * c.den();
  std::vector<Poly> polys;
  polys.reserve(components.size());
  for (const auto& c : components)
    polys.push_back(c.num() * common_den.divmod(c.den()).first);
  Poly g;
  for (const auto& p : polys) g = poly_gcd(g, p);
  if (g.degree() > 0)
    for (auto& p : polys) p = p.divmod(g).first;
  CRat scale = content_normalizer(polys);
  for (auto& p : polys) p = scale * p;
  return ProjectiveCurve(std::move(polys), r_max);
}

bool ProjectiveCurve::is_constant() const {
  return std::all_of(components_.begin(), components_.end(),
                     [](const Poly& p) { return p.degree() <= 0; });
}

double ProjectiveCurve::sup_norm(const std::complex<double>& z) const {
  double m = 0.0;
  for (const auto& c : components_) m = std::max(m, std::abs(c.eval(z)));
  return m;
}

Hypersurface::Hypersurface(int ambient_dim, std::vector<Term> terms)
    : nvars_(ambient_dim + 1), terms_(std::move(terms)) {
  if (ambient_dim < 1) throw DomainError("hypersurface: ambient dimension must be >= 1");
  if (terms_.empty()) throw DomainError("hypersurface: zero polynomial");
  degree_ = -1;
  norm_ = 0.0;
  for (const auto& t : terms_) {
    if (static_cast<int>(t.exponents.size()) != nvars_)
      throw DomainError("hypersurface: exponent tuple length mismatch");
    int total = 0;
    for (int e : t.exponents) {
      if (e < 0) throw DomainError("hypersurface: negative exponent");
      total += e;
    }
    if (degree_ < 0) degree_ = total;
    // exact homogeneity: Q(lambda z) = lambda^d Q(z) iff all term degrees agree
    if (total != degree_)
      throw DomainError("hypersurface: polynomial is not homogeneous");
    norm_ = std::max(norm_, abs_value(t.coeff));
  }
  if (degree_ < 1) throw DomainError("hypersurface: degree must be >= 1");
}

Poly Hypersurface::compose(const ProjectiveCurve& f) const {
  if (f.dimension() != ambient_dimension())
    throw DomainError("hypersurface: dimension mismatch with curve");
  Poly acc;
  for (const auto& t : terms_) {
    Poly term = Poly::constant(t.coeff);
    for (int v = 0; v < nvars_; ++v) {
      int e = t.exponents[static_cast<size_t>(v)];
      if (e > 0) term = term * f.components()[static_cast<size_t>(v)].pow(e);
    }
    acc = acc + term;
  }
  return acc;
}

std::complex<double> Hypersurface::eval(const std::vector<std::complex<double>>& z) const {
  if (static_cast<int>(z.size()) != nvars_)
    throw DomainError("hypersurface: evaluation tuple length mismatch");
  std::complex<double> acc = 0.0;
  for (const auto& t : terms_) {
    std::complex<double> term = to_complex(t.coeff);
    for (int v = 0; v < nvars_; ++v)
      for (int e = 0; e < t.exponents[static_cast<size_t>(v)]; ++e)
        term *= z[static_cast<size_t>(v)];
    acc += term;
  }
  return acc;
}

DiscDivisor divisor_of_pullback(const ProjectiveCurve& f, const Hypersurface& d, double r_max) {
  Poly pullback = d.compose(f);
  if (pullback.is_zero())
    throw ContainmentError(
        "divisor_of_pullback: Q o f vanishes identically; the hypothesis f(disc) not"
        " contained in D fails");

  DiscDivisor out;
  for (const auto& root : roots_with_multiplicity(pullback)) {
    if (std::abs(root.location) > r_max + 1e-12) continue;
    if (root.location == std::complex<double>(0.0, 0.0))
      out.origin_multiplicity = root.multiplicity;
    else
      out.support.push_back({root.location, root.multiplicity});
  }
  return out;
}

namespace {

void check_no_zero_on_circle(const ProjectiveCurve& f, const Hypersurface& d, double r) {
  Poly pullback = d.compose(f);
  if (pullback.is_zero())
    throw ContainmentError(
        "proximity_function: Q o f vanishes identically; the hypothesis f(disc) not"
        " contained in D fails");
  for (const auto& root : roots_with_multiplicity(pullback))
    if (std::abs(std::abs(root.location) - r) < kCircleMatchTol)
      throw SingularCircleError("proximity_function: zero of Q o f on the sampled circle");
}

}  // namespace

double proximity_function(const ProjectiveCurve& f, const Hypersurface& d, double r,
                          const QuadratureOptions& opts) {
  check_radius(r);
  if (r > f.r_max() + 1e-15)
    throw DomainError("proximity_function: r beyond the curve's admissible radius");
  check_no_zero_on_circle(f, d, r);

  Poly pullback = d.compose(f);
  double log_norm_q = std::log(d.coefficient_norm());
  int deg = d.degree();
  auto integrand = [&](double theta) {
    std::complex<double> z = std::polar(r, theta);
    double value = deg * std::log(f.sup_norm(z)) + log_norm_q - std::log(std::abs(pullback.eval(z)));
    return value;
  };
  return circle_integral(integrand, opts).value / (2.0 * std::numbers::pi);
}

double order_function(const ProjectiveCurve& f, double r, const QuadratureOptions& opts) {
  check_radius(r);
  if (r > f.r_max() + 1e-15)
    throw DomainError("order_function: r beyond the curve's admissible radius");
  auto integrand = [&](double theta) {
    return std::log(f.sup_norm(std::polar(r, theta)));
  };
  return circle_integral(integrand, opts).value / (2.0 * std::numbers::pi);
}

std::vector<FmtRow> fmt_sweep(const ProjectiveCurve& f, const Hypersurface& d,
                              const std::vector<double>& r_grid, const QuadratureOptions& opts) {
  DiscDivisor divisor = divisor_of_pullback(f, d, f.r_max());
  int deg = d.degree();

  std::vector<FmtRow> rows(r_grid.size());
  // grid points are independent; inner quadratures stay serial so the
  // result is identical to a fully serial evaluation
  QuadratureOptions inner = opts;
  inner.mode = ExecMode::Serial;
  sweep(
      static_cast<int>(r_grid.size()),
      [&](int i) {
        double r = r_grid[static_cast<size_t>(i)];
        FmtRow row;
        row.r = r;
        row.proximity = proximity_function(f, d, r, inner);
        row.counting = counting_function(divisor, r);
        row.order = order_function(f, r, inner);
        row.defect = row.proximity + row.counting - deg * row.order;
        rows[static_cast<size_t>(i)] = row;
        return 0.0;
      },
      opts.mode);
  return rows;
}

std::vector<double> fmt_defect(const ProjectiveCurve& f, const Hypersurface& d,
                               const std::vector<double>& r_grid, const QuadratureOptions& opts) {
  std::vector<double> out;
  for (const auto& row : fmt_sweep(f, d, r_grid, opts)) out.push_back(row.defect);
  return out;
}

std::vector<double> transcendence_ratio(const ProjectiveCurve& f,
                                        const std::vector<double>& r_grid,
                                        const QuadratureOptions& opts) {
  QuadratureOptions inner = opts;
  inner.mode = ExecMode::Serial;
  return sweep(
      static_cast<int>(r_grid.size()),
      [&](int i) {
        double r = r_grid[static_cast<size_t>(i)];
        return order_function(f, r, inner) / std::log(1.0 / (1.0 - r));
      },
      opts.mode);
}

double GermCurve::admissible_radius() const {
  double r = 1.0;
  for (const auto& g : components) r = std::min(r, 0.9 * g.radius);
  return r;
}

std::vector<double> transcendence_ratio(const GermCurve& f, const std::vector<double>& r_grid,
                                        const QuadratureOptions& opts) {
  if (f.components.size() < 2)
    throw DomainError("transcendence_ratio: need at least two components");
  double admissible = f.admissible_radius();
  QuadratureOptions inner = opts;
  inner.mode = ExecMode::Serial;
  return sweep(
      static_cast<int>(r_grid.size()),
      [&](int i) {
        double r = r_grid[static_cast<size_t>(i)];
        check_radius(r);
        if (r > admissible)
          throw InsufficientOrderError("transcendence_ratio: r beyond germ validity radius");
        auto integrand = [&](double theta) {
          std::complex<double> z = std::polar(r, theta);
          double m = 0.0;
          for (const auto& g : f.components) m = std::max(m, std::abs(g.series.eval(z)));
          return std::log(m);
        };
        double order = circle_integral(integrand, inner).value / (2.0 * std::numbers::pi);
        return order / std::log(1.0 / (1.0 - r));
      },
      opts.mode);
}

NowhereZeroFn NowhereZeroFn::exponential() {
  return {"exp(z)", RationalFn::from_poly(Poly::constant(CRat{1}))};
}

NowhereZeroFn NowhereZeroFn::geometric() {
  // phi = 1/(1-z); phi'/phi = 1/(1-z)
  Poly one_minus_z({CRat{1}, CRat{-1}});
  return {"1/(1-z)", RationalFn(Poly::constant(CRat{1}), one_minus_z)};
}

NowhereZeroFn NowhereZeroFn::from_rational(const RationalFn& phi, double r_max,
                                           const std::string& name) {
  if (phi.is_zero()) throw DomainError("NowhereZeroFn: phi vanishes identically");
  for (const Poly* part : {&phi.num(), &phi.den()}) {
    if (part->degree() <= 0) continue;
    for (const auto& root : roots_with_multiplicity(*part))
      if (std::abs(root.location) <= r_max + 1e-12)
        throw PoleError("NowhereZeroFn: zero or pole of phi inside the sampled disc");
  }
  RationalFn psi = RationalFn(phi.num().derivative(), phi.num()) -
                   RationalFn(phi.den().derivative(), phi.den());
  return {name.empty() ? "rational" : name, psi};
}

namespace {

RationalFn nth_derivative(RationalFn f, int n) {
  for (int i = 0; i < n; ++i) f = f.derivative();
  return f;
}

}  // namespace

std::vector<double> ldl_ratio(const NowhereZeroFn& phi, int lambda,
                              const std::vector<double>& r_grid, const QuadratureOptions& opts) {
  if (lambda < 1) throw DomainError("ldl_ratio: lambda must be >= 1");
  RationalFn derived = nth_derivative(phi.log_derivative, lambda - 1);

  QuadratureOptions inner = opts;
  inner.mode = ExecMode::Serial;
  return sweep(
      static_cast<int>(r_grid.size()),
      [&](int i) {
        double r = r_grid[static_cast<size_t>(i)];
        check_radius(r);
        auto integrand = [&](double theta) {
          return std::abs(derived.eval(std::polar(r, theta)));
        };
        double integral = circle_integral(integrand, inner).value;
        return integral * std::pow(1.0 - r, lambda) / std::log(1.0 / (1.0 - r));
      },
      opts.mode);
}

std::vector<double> ldl_product_ratio(const std::vector<NowhereZeroFn>& phis,
                                      const std::vector<int>& lambdas, double t,
                                      const std::vector<double>& r_grid,
                                      const QuadratureOptions& opts) {
  if (phis.empty() || phis.size() != lambdas.size())
    throw DomainError("ldl_product_ratio: phis and lambdas must pair up");
  if (!(t > 0.0)) throw DomainError("ldl_product_ratio: t must be positive");
  if (t * static_cast<double>(phis.size()) >= 1.0)
    throw DomainError("ldl_product_ratio: requires t * n < 1");

  std::vector<RationalFn> derived;
  int lambda_sum = 0;
  for (size_t j = 0; j < phis.size(); ++j) {
    if (lambdas[j] < 1) throw DomainError("ldl_product_ratio: lambda must be >= 1");
    derived.push_back(nth_derivative(phis[j].log_derivative, lambdas[j] - 1));
    lambda_sum += lambdas[j];
  }
  double s = t * lambda_sum;

  QuadratureOptions inner = opts;
  inner.mode = ExecMode::Serial;
  return sweep(
      static_cast<int>(r_grid.size()),
      [&](int i) {
        double r = r_grid[static_cast<size_t>(i)];
        check_radius(r);
        auto integrand = [&](double theta) {
          std::complex<double> z = std::polar(r, theta);
          std::complex<double> prod = 1.0;
          for (const auto& g : derived) prod *= g.eval(z);
          return std::pow(std::abs(prod), t);
        };
        double integral = circle_integral(integrand, inner).value;
        return integral * std::pow(1.0 - r, s) / std::pow(std::log(1.0 / (1.0 - r)), s);
      },
      opts.mode);
}

}  // namespace jetlab
