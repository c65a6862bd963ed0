#include "jetlab/germ.hpp"

#include <cmath>

#include "jetlab/errors.hpp"
#include "jetlab/faa_di_bruno.hpp"

namespace jetlab {

ExactGerm make_polynomial_germ(std::vector<CRat> coeff, int truncation_order) {
  if (static_cast<int>(coeff.size()) > truncation_order + 1)
    throw InsufficientOrderError("polynomial germ: degree exceeds truncation order");
  coeff.resize(static_cast<size_t>(truncation_order) + 1, CRat{});
  return ExactGerm(ExactSeries(std::move(coeff)));
}

ExactGerm make_exp_germ(int truncation_order) {
  std::vector<CRat> c(static_cast<size_t>(truncation_order) + 1);
  Rational fact = 1;
  c[0] = CRat{1};
  for (int j = 1; j <= truncation_order; ++j) {
    fact *= j;
    c[static_cast<size_t>(j)] = CRat{Rational(1) / fact};
  }
  return ExactGerm(ExactSeries(std::move(c)), std::numeric_limits<double>::infinity());
}

ExactGerm make_geometric_germ(int truncation_order) {
  std::vector<CRat> c(static_cast<size_t>(truncation_order) + 1, CRat{1});
  return ExactGerm(ExactSeries(std::move(c)), 1.0);
}

template <class T>
std::vector<T> derivative_values(const Germ<T>& g, int k, const T& z) {
  if (g.truncation_order() < k)
    throw InsufficientOrderError("germ truncated at order " +
                                 std::to_string(g.truncation_order()) +
                                 ", jet order " + std::to_string(k) + " requested");
  if (scalar_abs(z) > 0.9 * g.radius)
    throw InsufficientOrderError("evaluation point outside 0.9 * validity radius");

  std::vector<T> out;
  out.reserve(static_cast<size_t>(k) + 1);
  Series<T> s = g.series;
  out.push_back(s.eval(z));
  for (int j = 1; j <= k; ++j) {
    s = s.derivative();
    out.push_back(s.eval(z));
  }
  return out;
}

template <class T>
JetVector<T> jet_of(std::span<const Germ<T>> germs, int k, const T& z,
                    const std::set<int>& divisor_vars) {
  if (k < 1) throw DomainError("jet_of: jet order must be >= 1");
  for (int var : divisor_vars)
    if (var < 1 || var > static_cast<int>(germs.size()))
      throw DomainError("jet_of: divisor variable out of range");

  JetVector<T> jet;
  for (int i = 0; i < static_cast<int>(germs.size()); ++i) {
    const int var = i + 1;
    std::vector<T> d = derivative_values(germs[static_cast<size_t>(i)], k, z);
    if (divisor_vars.count(var)) {
      if (scalar_is_zero(d[0]))
        throw PoleError("jet_of: divisor-variable germ " + std::to_string(var) +
                        " vanishes at the evaluation point");
      // quotient symbols (d^j z_i)/z_i = f^(j)(z)/f(z)
      for (int j = 1; j <= k; ++j)
        jet.values[plain(var, j)] = d[static_cast<size_t>(j)] / d[0];
      // log coordinates via the Faa di Bruno expansion of the quotients
      for (int j = 1; j <= k; ++j) {
        JetVector<T> quotients;
        for (int s = 1; s <= j; ++s) quotients.values[plain(var, s)] = jet.values[plain(var, s)];
        jet.values[logc(var, j)] = evaluate(faa_di_bruno_log(var, j, k), quotients);
      }
    } else {
      for (int j = 1; j <= k; ++j) jet.values[plain(var, j)] = d[static_cast<size_t>(j)];
    }
  }
  return jet;
}

template <class T>
T evaluate(const JetPolynomial& p, const JetVector<T>& jet) {
  T acc{};
  for (const auto& term : p.terms()) {
    T v = scalar_cast(term.coeff, T{});
    for (const auto& [coord, exp] : term.factors) {
      auto it = jet.values.find(coord);
      if (it == jet.values.end())
        throw DomainError("evaluate: jet vector missing coordinate " + to_string(coord));
      for (int e = 0; e < exp; ++e) v = v * it->second;
    }
    acc += v;
  }
  return acc;
}

bool homothety_weight_check(const JetPolynomial& p, int weight,
                            const std::vector<ExactGerm>& germs, const CRat& lambda,
                            const CRat& eval_point, const std::set<int>& divisor_vars) {
  auto w = p.weight();
  if (!w || *w != weight)
    throw DomainError("homothety_weight_check: polynomial is not isobaric of the stated weight");

  int k = 0;
  for (const JetCoordinate& c : p.support()) k = std::max(k, c.order);
  k = std::max(k, 1);

  std::vector<ExactGerm> composed;
  composed.reserve(germs.size());
  for (const auto& g : germs) composed.push_back(compose_homothety(g, lambda));

  CRat lhs = evaluate(p, jet_of(composed, k, eval_point, divisor_vars));
  CRat rhs_val = evaluate(p, jet_of(germs, k, lambda * eval_point, divisor_vars));
  CRat rhs = lambda.pow(weight) * rhs_val;

  double diff = abs_value(lhs - rhs);
  return diff <= 1e-10 * (1.0 + abs_value(rhs));
}

template std::vector<CRat> derivative_values(const ExactGerm&, int, const CRat&);
template std::vector<std::complex<double>> derivative_values(const FloatGerm&, int,
                                                             const std::complex<double>&);
template JetVector<CRat> jet_of(std::span<const ExactGerm>, int, const CRat&,
                                const std::set<int>&);
template JetVector<std::complex<double>> jet_of(std::span<const FloatGerm>, int,
                                                const std::complex<double>&,
                                                const std::set<int>&);
template CRat evaluate(const JetPolynomial&, const JetVector<CRat>&);
template std::complex<double> evaluate(const JetPolynomial&,
                                       const JetVector<std::complex<double>>&);

}  // namespace jetlab
