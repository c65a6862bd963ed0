#include "jetlab/bounds.hpp"

#include "jetlab/errors.hpp"

namespace jetlab {

namespace {

BigInt pow_big(const BigInt& b, const BigInt& e) {
  if (e < 0) throw DomainError("pow_big: negative exponent");
  return big_pow(b, e.convert_to<unsigned>());
}

}  // namespace

JetParameters jet_parameters(long n) {
  if (n < 1) throw DomainError("jet_parameters: n must be >= 1");
  JetParameters p;
  p.n = n;
  p.k = n + 1;
  p.k_prime = p.k * (p.k + 1) / 2;
  p.delta = (p.k + 1) * n + p.k;
  BigInt delta_pow = pow_big(p.delta, p.k - 1);
  p.r0 = delta_pow * (p.delta + 1) * (p.delta + 2);
  p.r0_sum_form = 2 * delta_pow * p.k_prime + delta_pow * (p.delta + 1) * (p.delta + 1);
  p.r0_forms_agree = (p.r0 == p.r0_sum_form);
  return p;
}

bool key_inequality(long n) {
  JetParameters p = jet_parameters(n);
  BigInt lhs = p.k * (p.k + p.delta - 1 + p.k * p.delta);
  BigInt rhs = (p.delta + 1) * (p.delta + 1);
  return lhs < rhs;
}

std::optional<DegreeDecomposition> decompose_degree(long n, const BigInt& d) {
  JetParameters p = jet_parameters(n);
  if (d < 1) throw DomainError("decompose_degree: d must be >= 1");

  BigInt threshold = (p.r0 + p.k) * p.delta + 2 * p.delta;
  if (d < threshold) return std::nullopt;

  // unique epsilon congruent to d mod delta inside [k, k + delta - 1]
  BigInt residue = d % p.delta;
  BigInt epsilon = residue;
  while (epsilon < p.k) epsilon += p.delta;

  DegreeDecomposition out;
  out.epsilon = epsilon;
  out.r = (d - epsilon) / p.delta - p.k;

  BigInt delta_pow = pow_big(p.delta, p.k - 1);
  BigInt rhs = 2 * delta_pow * p.k_prime + delta_pow * p.k * (epsilon + p.k * p.delta);
  out.r_inequality_holds = out.r > rhs;
  return out;
}

ThresholdComparison threshold_vs_stated_bound(long n) {
  JetParameters p = jet_parameters(n);
  ThresholdComparison c;
  c.threshold = (p.r0 + p.k) * p.delta + 2 * p.delta;
  c.stated = pow_big(BigInt(n + 1), BigInt(n + 3)) * pow_big(BigInt(n + 2), BigInt(n + 3));
  c.ok = c.threshold < c.stated;
  return c;
}

BigInt main_theorem_bound(long n_ambient) {
  if (n_ambient < 2) throw DomainError("main_theorem_bound: ambient dimension must be >= 2");
  return pow_big(BigInt(n_ambient), BigInt(n_ambient + 2)) *
         pow_big(BigInt(n_ambient + 1), BigInt(n_ambient + 2));
}

TwistRatios twist_ratio_limit(long n, const std::vector<long>& alpha_grid,
                              const std::optional<BigInt>& degree, const BigInt& beta,
                              const BigInt& beta_tilde) {
  JetParameters p = jet_parameters(n);
  BigInt d = degree ? *degree : (p.r0 + p.k) * p.delta + 2 * p.delta;
  auto decomposition = decompose_degree(n, d);
  if (!decomposition || !decomposition->r_inequality_holds)
    throw DomainError("twist_ratio_limit: chosen degree has no feasible decomposition");

  BigInt delta_pow = pow_big(p.delta, p.k - 1);
  BigInt numerator_slope = delta_pow * p.k_prime;
  BigInt denominator_slope = decomposition->r - delta_pow * p.k * (decomposition->epsilon + p.k * p.delta);
  // r-inequality gives denominator_slope > 2 * numerator_slope > 0

  TwistRatios out;
  out.limit = Rational(numerator_slope, denominator_slope);
  out.limit_below_half = out.limit < Rational(1, 2);
  for (long alpha : alpha_grid) {
    if (alpha < 1) throw DomainError("twist_ratio_limit: alpha must be >= 1");
    BigInt m = beta + alpha * numerator_slope;
    BigInt mt = -beta_tilde + alpha * denominator_slope;
    if (mt <= 0) throw DomainError("twist_ratio_limit: nonpositive vanishing order");
    out.ratios.emplace_back(m, mt);
  }
  return out;
}

}  // namespace jetlab
