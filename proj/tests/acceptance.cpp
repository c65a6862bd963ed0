// Acceptance suite: one verdict line per criterion, nonzero exit when any
// fails. Each criterion pins its tolerances in code.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <numbers>
#include <random>
#include <vector>

#include "jetlab/bounds.hpp"
#include "jetlab/faa_di_bruno.hpp"
#include "jetlab/germ.hpp"
#include "jetlab/minimal_geometry.hpp"
#include "jetlab/nevanlinna.hpp"
#include "jetlab/quadrature.hpp"
#include "jetlab/wronskian.hpp"

using namespace jetlab;

namespace {

int failures = 0;

template <class Fn>
void criterion(int number, const char* label, Fn&& body) {
  auto start = std::chrono::steady_clock::now();
  bool ok = false;
  std::string detail;
  try {
    detail = body();
    ok = true;
  } catch (const std::exception& e) {
    detail = e.what();
  }
  double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%s criterion %d (%s): %s [%.2fs]\n", ok ? "PASS" : "FAIL", number, label,
              detail.c_str(), seconds);
  std::fflush(stdout);
  if (!ok) ++failures;
}

struct Check {
  void require(bool cond, const std::string& what) {
    if (!cond) throw Error("failed: " + what);
  }
};

ExactGerm generic_series_germ() {
  // generic rational germ with f(0) != 0, long enough for order-6 jets
  std::vector<CRat> c;
  long nums[] = {1, 1, 2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31};
  long dens[] = {1, 2, 3, 1, 7, 2, 5, 3, 11, 2, 13, 3, 17};
  for (int j = 0; j < 13; ++j) c.emplace_back(Rational(nums[j], dens[j]));
  return make_polynomial_germ(std::move(c), 16);
}

CRat log_derivative_series_oracle(const ExactGerm& f, int j) {
  ExactSeries g = f.series.derivative() * f.series.reciprocal();
  for (int i = 1; i < j; ++i) g = g.derivative();
  return g[0];
}

Poly poly_from_longs(std::vector<long> c) {
  std::vector<CRat> v;
  for (long x : c) v.emplace_back(x);
  return Poly(std::move(v));
}

Hypersurface coordinate_hyperplane(int n, int which) {
  std::vector<int> e(static_cast<size_t>(n) + 1, 0);
  e[static_cast<size_t>(which)] = 1;
  return Hypersurface(n, {{e, CRat{1}}});
}

double spread(const std::vector<double>& v) {
  auto [lo, hi] = std::minmax_element(v.begin(), v.end());
  return *hi - *lo;
}

double median_of(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  size_t n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

std::string criterion_1() {
  Check c;
  ExactGerm f = generic_series_germ();
  std::vector<ExactGerm> tuple = {f};
  auto jet = jet_of(tuple, 6, CRat{}, {1});
  for (int j = 1; j <= 6; ++j) {
    JetPolynomial expansion = faa_di_bruno_log(1, j);
    c.require(expansion.weight() == j, "expansion isobaric of weight j");
    for (const auto& term : expansion.terms()) {
      c.require(term.coeff.is_real() && denominator(term.coeff.re) == 1,
                "integer coefficients");
    }
    c.require(evaluate(expansion, jet) == log_derivative_series_oracle(f, j),
              "expansion matches the series oracle at order " + std::to_string(j));
    // exact round trip with the inverse expansion
    std::map<JetCoordinate, JetPolynomial> table;
    for (int s = 1; s <= j; ++s) table[plain(1, s)] = faa_di_bruno_inverse(1, s);
    c.require(expansion.substitute(table) == JetPolynomial::coordinate(logc(1, j)),
              "round trip is the identity at order " + std::to_string(j));
  }
  return "orders 1..6 match the series oracle exactly; round trips exact";
}

std::string criterion_2() {
  Check c;
  std::mt19937 engine(118);
  auto small = [&](long lo, long hi) {
    return lo + static_cast<long>(engine() % static_cast<unsigned long>(hi - lo + 1));
  };
  auto random_coeff = [&]() { return CRat(small(-4, 4), small(-2, 2)); };
  auto random_germ = [&](bool unit_at_origin) {
    std::vector<CRat> coeff(static_cast<size_t>(small(2, 5)) + 1);
    for (auto& x : coeff) x = random_coeff();
    if (unit_at_origin && coeff[0].is_zero()) coeff[0] = CRat{1};
    return make_polynomial_germ(std::move(coeff), 16);
  };
  const std::vector<CRat> lambdas = {CRat(2, 0), CRat(1, 1), CRat(Rational(1, 2), Rational(1, 3)),
                                     CRat(-1, 2), CRat(3, -1)};

  int cases = 0;
  for (int trial = 0; trial < 49; ++trial) {
    // random isobaric polynomial in <= 2 variables; variable 1 is a divisor
    // variable when any log/quotient factor lands on it
    int weight = static_cast<int>(small(1, 6));
    bool divisor = small(0, 1) == 1;
    JetPolynomial p;
    for (int t = 0, terms = static_cast<int>(small(1, 3)); t < terms; ++t) {
      std::vector<std::pair<JetCoordinate, int>> factors;
      int rest = weight;
      while (rest > 0) {
        int order = static_cast<int>(small(1, rest));
        int var = static_cast<int>(small(1, 2));
        CoordKind kind =
            (var == 1 && divisor && small(0, 1) == 1) ? CoordKind::Log : CoordKind::Plain;
        factors.emplace_back(JetCoordinate{kind, var, order}, 1);
        rest -= order;
      }
      p = p + JetPolynomial({JetMonomial(random_coeff(), factors)});
    }
    if (p.is_zero()) continue;

    std::vector<ExactGerm> germs = {random_germ(divisor), random_germ(false)};
    std::set<int> divisor_vars = divisor ? std::set<int>{1} : std::set<int>{};
    CRat lambda = lambdas[static_cast<size_t>(trial) % lambdas.size()];
    CRat z{Rational(small(1, 5), 10)};
    c.require(homothety_weight_check(p, weight, germs, lambda, z, divisor_vars),
              "homogeneity on randomized case " + std::to_string(trial));
    ++cases;
  }

  // the section-6 Wronskian at n = 2, weight 3
  WronskianDifferential w = build_wronskian(vandermonde_arrangement(2, 6));
  std::vector<ExactGerm> cubics = {random_germ(false), random_germ(false)};
  c.require(homothety_weight_check(w.numerator, 3, cubics, CRat(1, 1), CRat{Rational(3, 10)}),
            "homogeneity of the n=2 Wronskian");
  ++cases;
  return std::to_string(cases) + " randomized homogeneity checks within 1e-10 relative";
}

std::string criterion_3() {
  Check c;
  std::mt19937 engine(2718);
  auto random_germs = [&](int count) {
    std::vector<ExactGerm> out;
    for (int i = 0; i < count; ++i) {
      std::vector<CRat> coeff(5);
      for (auto& x : coeff)
        x = CRat(static_cast<long>(engine() % 9) - 4, static_cast<long>(engine() % 3) - 1);
      out.push_back(make_polynomial_germ(std::move(coeff), 16));
    }
    return out;
  };

  for (int n = 1; n <= 5; ++n) {
    // symbolic weight check on a built arrangement
    int q_built = std::min(2 * n * n, n + 4);
    if (q_built < n + 2) q_built = n + 2;
    WronskianDifferential w = build_wronskian(vandermonde_arrangement(n, q_built));
    c.require(w.weight == n * (n + 1) / 2, "stored weight at n=" + std::to_string(n));
    c.require(w.numerator.weight() == n * (n + 1) / 2,
              "symbolic weight of the expanded numerator at n=" + std::to_string(n));
    c.require(w.vanishing_order == q_built - (n + 1), "vanishing order of built arrangement");
    // vanishing order across the whole q range, exact integer arithmetic
    for (long q = n + 2; q <= 2 * n * n; ++q) {
      auto [m, mt] = recover_fujimoto_weight(n, q);
      c.require(m == n * (n + 1) / 2 && mt == q - (n + 1),
                "fujimoto pair at n=" + std::to_string(n) + ", q=" + std::to_string(q));
    }
  }

  // local log form rewriting agrees with the global form, exactly, n <= 3
  for (int n = 1; n <= 3; ++n) {
    WronskianDifferential w = build_wronskian(vandermonde_arrangement(n, n + 3));
    std::vector<int> index_set(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) index_set[static_cast<size_t>(i)] = i + 2;
    LocalLogForm form = local_log_form(w, index_set);
    for (int trial = 0; trial < 3; ++trial) {
      c.require(verify_local_log_form(w, form, random_germs(n), CRat{Rational(1, 7)}),
                "local log form equality at n=" + std::to_string(n));
    }
  }
  return "weights and vanishing orders exact for n=1..5, q<=2n^2; local forms exact for n<=3";
}

std::string criterion_4() {
  Check c;
  const std::vector<double> grid = {0.5, 0.6, 0.7, 0.8, 0.9, 0.95};

  // the closed-form CP^1 pair: defect identically zero
  ProjectiveCurve line({poly_from_longs({1}), poly_from_longs({0, 1})}, 0.96);
  std::vector<double> closed = fmt_defect(line, coordinate_hyperplane(1, 1), grid);
  for (double d : closed) c.require(std::abs(d) <= 1e-7, "closed-form defect is zero");

  struct Pair {
    ProjectiveCurve f;
    Hypersurface d;
    const char* label;
  };
  std::vector<Pair> pairs;
  pairs.push_back({line, coordinate_hyperplane(1, 0), "[1:z] vs z0"});
  ProjectiveCurve quad({poly_from_longs({1}), Poly({CRat{Rational(-1, 9)}, CRat{}, CRat{1}})},
                       0.96);
  pairs.push_back({quad, coordinate_hyperplane(1, 1), "[1:z^2-1/9] vs z1"});
  ProjectiveCurve moebius({poly_from_longs({0, 2}), poly_from_longs({1, 0, -1})}, 0.96);
  pairs.push_back(
      {moebius,
       Hypersurface(1, {{{1, 0}, CRat{1}}, {{0, 1}, CRat{1}}}),  // z0 + z1
       "[2z:1-z^2] vs z0+z1"});
  ProjectiveCurve twisted({poly_from_longs({1}), poly_from_longs({0, 1}),
                           poly_from_longs({0, 0, 1})},
                          0.96);
  pairs.push_back({twisted, coordinate_hyperplane(2, 2), "[1:z:z^2] vs z2"});
  pairs.push_back({line,
                   Hypersurface(1, {{{2, 0}, CRat{1}}, {{0, 2}, CRat{1}}}),  // z0^2 + z1^2
                   "[1:z] vs z0^2+z1^2"});
  pairs.push_back({quad,
                   Hypersurface(1, {{{0, 2}, CRat{1}}}),  // z1^2, degree 2
                   "[1:z^2-1/9] vs z1^2"});

  for (const auto& pair : pairs) {
    std::vector<double> defects = fmt_defect(pair.f, pair.d, grid);
    c.require(spread(defects) <= 1e-6,
              std::string("defect spread for ") + pair.label + " = " +
                  std::to_string(spread(defects)));
  }
  return std::to_string(pairs.size() + 1) +
         " curve/hypersurface pairs with defect spread <= 1e-6 on the 6-point grid";
}

std::string criterion_5() {
  Check c;
  for (long n = 1; n <= 12; ++n) {
    c.require(key_inequality(n), "key inequality at n=" + std::to_string(n));
    c.require(threshold_vs_stated_bound(n).ok, "threshold < stated at n=" + std::to_string(n));
  }
  ThresholdComparison c2 = threshold_vs_stated_bound(2);
  c.require(c2.threshold == 207691, "n=2 threshold recomputed");
  c.require(c2.stated == 248832, "n=2 stated bound recomputed");
  for (long n = 2; n <= 8; ++n)
    c.require(main_theorem_bound(n) == threshold_vs_stated_bound(n - 1).stated,
              "dimension shift at n=" + std::to_string(n));
  return "exact inequalities for n=1..12; n=2 values 207691/248832; shift identity n=2..8";
}

std::string criterion_6() {
  Check c;
  const std::vector<double> eps = {1e-2, 1e-4, 1e-6, 1e-8};
  for (double ratio : {0.25, 0.5, 0.9}) {
    ProofIntegral out = proof_integral_convergence(ratio, eps);
    c.require(out.verdict == ProofIntegral::Verdict::Converging,
              "converging verdict at ratio " + std::to_string(ratio));
    c.require(out.tail_bound > 0.0 && std::isfinite(out.tail_bound),
              "Cauchy tail certificate at ratio " + std::to_string(ratio));
  }
  for (double ratio : {1.0, 1.5}) {
    ProofIntegral out = proof_integral_convergence(ratio, eps);
    c.require(out.verdict == ProofIntegral::Verdict::Diverging,
              "diverging verdict at ratio " + std::to_string(ratio));
  }
  return "verdicts correct on {0.25, 0.5, 0.9 | 1.0, 1.5} with tail certificates";
}

std::string criterion_7() {
  Check c;
  std::vector<double> grid;
  for (double r = 0.5; r < 0.9905; r += 0.01) grid.push_back(r);

  // fitted constant per family member: the max of its normalized ratios,
  // i.e. the smallest constant that bounds the member on the grid
  std::vector<double> constants;
  for (const NowhereZeroFn& phi : {NowhereZeroFn::exponential(), NowhereZeroFn::geometric()}) {
    for (int lambda = 1; lambda <= 3; ++lambda) {
      std::vector<double> ratios = ldl_ratio(phi, lambda, grid);
      for (double v : ratios) c.require(std::isfinite(v), "finite ldl ratio");
      constants.push_back(*std::max_element(ratios.begin(), ratios.end()));
    }
  }
  // product estimates: single factor and pairs, t sum(lambda) < 1 preserved
  {
    auto single = ldl_product_ratio({NowhereZeroFn::exponential()}, {1}, 0.5, grid);
    constants.push_back(*std::max_element(single.begin(), single.end()));
    auto pair = ldl_product_ratio({NowhereZeroFn::geometric(), NowhereZeroFn::geometric()},
                                  {1, 1}, 0.4, grid);
    constants.push_back(*std::max_element(pair.begin(), pair.end()));
    auto mixed = ldl_product_ratio({NowhereZeroFn::geometric(), NowhereZeroFn::geometric()},
                                   {2, 3}, 0.3, grid);
    constants.push_back(*std::max_element(mixed.begin(), mixed.end()));
  }

  double med = median_of(constants);
  double max = *std::max_element(constants.begin(), constants.end());
  c.require(max <= 3.0 * med, "fitted constants within 3x of their median (max " +
                                  std::to_string(max) + ", median " + std::to_string(med) + ")");
  return "family of 9 fitted constants within 3x of their median (max " +
         std::to_string(max) + ", median " + std::to_string(med) + ")";
}

std::string criterion_8() {
  Check c;
  c.require(verify_conformality(plane_surface()), "plane conformal");
  c.require(verify_conformality(enneper_surface()), "enneper conformal");
  std::mt19937 engine(57);
  for (int trial = 0; trial < 5; ++trial) {
    auto coeff = [&]() {
      return CRat(static_cast<long>(engine() % 7) - 3, static_cast<long>(engine() % 3) - 1);
    };
    std::vector<CRat> fn(1 + engine() % 3), gn(1 + engine() % 3);
    for (auto& x : fn) x = coeff();
    for (auto& x : gn) x = coeff();
    Poly fp(fn), gp(gn);
    if (fp.is_zero()) fp = Poly::constant(CRat{1});
    c.require(verify_conformality(weierstrass_surface(RationalFn::from_poly(fp),
                                                      RationalFn::from_poly(gp))),
              "generated surface conformal");
  }

  ProjectiveCurve enneper_map = gauss_map(enneper_surface());
  std::vector<std::complex<double>> samples;
  for (int i = 0; i < 16; ++i)
    samples.push_back(std::polar(0.3, 2.0 * std::numbers::pi * i / 16));
  double residual = holomorphy_residual(enneper_map, samples, 1e-5);
  c.require(residual <= 1e-8, "enneper residual " + std::to_string(residual));
  double control = holomorphy_residual_conjugated(enneper_map, 0, samples, 1e-5);
  c.require(control > 1e-2, "conjugated control " + std::to_string(control));
  return "conformality exact on presets and generated data; residuals " +
         std::to_string(residual) + " vs control " + std::to_string(control);
}

std::string criterion_9() {
  Check c;
  HyperplaneArrangement a;
  a.n = 1;
  for (long t : {2, -2, 3, -3, 5}) a.forms.push_back({Rational(-t), Rational(1)});
  WronskianDifferential w = build_wronskian(a);
  c.require(w.weight == 1 && w.vanishing_order == 3, "n=1, q=5 gives m=1, m~=3 > 2m");

  ProjectiveCurve f({Poly::constant(CRat{1}), Poly::monomial(CRat{1}, 1)}, 0.96);
  std::vector<double> grid;
  for (double r = 0.5; r < 0.951; r += 0.05) grid.push_back(r);
  std::vector<double> ratios = jet_norm_circle_ratios(w, f, grid);
  double max = *std::max_element(ratios.begin(), ratios.end());
  double med = median_of(ratios);
  c.require(max / med <= 5.0,
            "max/median = " + std::to_string(max / med) + " within 5");
  return "normalized circle integrals bounded: max/median = " + std::to_string(max / med);
}

}  // namespace

int main() {
  criterion(1, "faa di bruno expansions", criterion_1);
  criterion(2, "homothety homogeneity", criterion_2);
  criterion(3, "wronskian numerology", criterion_3);
  criterion(4, "first main theorem", criterion_4);
  criterion(5, "degree-bound arithmetic", criterion_5);
  criterion(6, "proof-closing integral", criterion_6);
  criterion(7, "logarithmic-derivative estimates", criterion_7);
  criterion(8, "gauss-map properties", criterion_8);
  criterion(9, "jet-norm circle integral", criterion_9);
  if (failures == 0) std::printf("all criteria passed\n");
  return failures == 0 ? 0 : 1;
}
