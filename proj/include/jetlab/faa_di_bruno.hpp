#ifndef JETLAB_FAA_DI_BRUNO_HPP
#define JETLAB_FAA_DI_BRUNO_HPP

#include <set>

#include "jetlab/jet_polynomial.hpp"

namespace jetlab {

// Expansion of d^j log z_i as an isobaric polynomial of weight j in the
// quotient symbols (d^s z_i)/z_i, 1 <= s <= j, with integer coefficients.
// The quotient symbol of order s is encoded as the Plain coordinate of
// variable i and order s.
//
// j=1: d[i]^1
// j=2: d[i]^2 - (d[i]^1)^2
// j=3: d[i]^3 - 3 d[i]^2 d[i]^1 + 2 (d[i]^1)^3
JetPolynomial faa_di_bruno_log(int var, int order, int max_order = kDefaultJetOrder);

// The converse expansion: (d^j z_i)/z_i as an isobaric polynomial of weight
// j in d^s log z_i, 1 <= s <= j, integer coefficients.
//
// j=1: dlog[i]^1
// j=2: dlog[i]^2 + (dlog[i]^1)^2
JetPolynomial faa_di_bruno_inverse(int var, int order, int max_order = kDefaultJetOrder);

// The two local trivializations of logarithmic jet differentials.
enum class Trivialization {
  LogBasis,       // divisor variables through d^j log z_i
  QuotientBasis,  // divisor variables through (d^j z_i)/z_i
};

// Rewrites an isobaric polynomial between the two bases, term by term, via
// the Faa di Bruno expansions. Weight is preserved.
//
// Toward QuotientBasis every Log factor is expanded (Log factors only occur
// on divisor variables). Toward LogBasis the Plain factors of the variables
// in `divisor_vars` are treated as quotient symbols and expanded; an empty
// set means every variable carrying a Plain factor. Mixed-weight input is a
// domain error.
JetPolynomial convert_trivialization(const JetPolynomial& p, Trivialization target,
                                     const std::set<int>& divisor_vars = {},
                                     int max_order = kDefaultJetOrder);

}  // namespace jetlab

#endif
