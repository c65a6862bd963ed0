#include "jetlab/faa_di_bruno.hpp"

#include <map>

#include "jetlab/errors.hpp"

namespace jetlab {

namespace {

void check_order(int order, int max_order) {
  if (order < 1 || order > max_order)
    throw DomainError("faa di bruno: order " + std::to_string(order) +
                      " outside [1, " + std::to_string(max_order) + "]");
}

// Derivation on polynomials in the quotient symbols w_s = (d^s z)/z:
// w_s' = w_{s+1} - w_s * w_1 (quotient rule). Extends by Leibniz; raises
// weight by exactly one.
JetPolynomial derive_quotient(const JetPolynomial& p, int var) {
  JetPolynomial out;
  JetPolynomial w1 = JetPolynomial::coordinate(plain(var, 1));
  for (const auto& term : p.terms()) {
    for (size_t k = 0; k < term.factors.size(); ++k) {
      const auto& [coord, exp] = term.factors[k];
      JetPolynomial rest = JetPolynomial::constant(term.coeff * CRat(long(exp)));
      for (size_t l = 0; l < term.factors.size(); ++l) {
        int e = term.factors[l].second - (l == k ? 1 : 0);
        rest = rest * JetPolynomial::coordinate(term.factors[l].first).pow(e);
      }
      JetPolynomial dcoord =
          JetPolynomial::coordinate(plain(var, coord.order + 1)) -
          JetPolynomial::coordinate(coord) * w1;
      out = out + rest * dcoord;
    }
  }
  return out;
}

// Derivation on polynomials in the log symbols L_s = d^s log z: L_s' = L_{s+1}.
JetPolynomial derive_log(const JetPolynomial& p, int var) {
  JetPolynomial out;
  for (const auto& term : p.terms()) {
    for (size_t k = 0; k < term.factors.size(); ++k) {
      const auto& [coord, exp] = term.factors[k];
      JetPolynomial rest = JetPolynomial::constant(term.coeff * CRat(long(exp)));
      for (size_t l = 0; l < term.factors.size(); ++l) {
        int e = term.factors[l].second - (l == k ? 1 : 0);
        rest = rest * JetPolynomial::coordinate(term.factors[l].first).pow(e);
      }
      out = out + rest * JetPolynomial::coordinate(logc(var, coord.order + 1));
    }
  }
  return out;
}

}  // namespace

JetPolynomial faa_di_bruno_log(int var, int order, int max_order) {
  check_order(order, max_order);
  // L_1 = w_1, L_{j+1} = D(L_j) with D the quotient-symbol derivation.
  JetPolynomial p = JetPolynomial::coordinate(plain(var, 1));
  for (int j = 1; j < order; ++j) p = derive_quotient(p, var);
  return p;
}

JetPolynomial faa_di_bruno_inverse(int var, int order, int max_order) {
  check_order(order, max_order);
  // v_1 = L_1, v_{j+1} = v_j' + v_j * L_1 from (f^(j)/f)' = f^(j+1)/f - (f^(j)/f)(f'/f).
  JetPolynomial p = JetPolynomial::coordinate(logc(var, 1));
  JetPolynomial l1 = p;
  for (int j = 1; j < order; ++j) p = derive_log(p, var) + p * l1;
  return p;
}

JetPolynomial convert_trivialization(const JetPolynomial& p, Trivialization target,
                                     const std::set<int>& divisor_vars, int max_order) {
  if (!p.is_isobaric())
    throw DomainError("convert_trivialization: input is not isobaric");

  std::map<JetCoordinate, JetPolynomial> table;
  for (const JetCoordinate& coord : p.support()) {
    if (target == Trivialization::QuotientBasis) {
      if (coord.kind == CoordKind::Log)
        table.emplace(coord, faa_di_bruno_log(coord.var, coord.order, max_order));
    } else {
      bool is_divisor = divisor_vars.empty() || divisor_vars.count(coord.var) > 0;
      if (coord.kind == CoordKind::Plain && is_divisor)
        table.emplace(coord, faa_di_bruno_inverse(coord.var, coord.order, max_order));
    }
  }
  return p.substitute(table);
}

}  // namespace jetlab
