#include "doctest.h"

#include <random>

#include "jetlab/errors.hpp"
#include "jetlab/faa_di_bruno.hpp"
#include "jetlab/germ.hpp"
#include "jetlab/jet_polynomial.hpp"

using namespace jetlab;

namespace {

JetPolynomial coord(CoordKind k, int var, int order) {
  return JetPolynomial::coordinate({k, var, order});
}

// Deterministic small-rational generator; mt19937 output is fixed by the
// standard so these tests are reproducible everywhere.
struct Rng {
  std::mt19937 engine{20240615};
  long small(long lo, long hi) {
    return lo + static_cast<long>(engine() % static_cast<unsigned long>(hi - lo + 1));
  }
  CRat coefficient() { return CRat(small(-5, 5), small(-2, 2)); }
  ExactGerm polynomial_germ(int degree, int truncation, bool nonzero_at_origin) {
    std::vector<CRat> c(static_cast<size_t>(degree) + 1);
    for (auto& x : c) x = coefficient();
    if (nonzero_at_origin && c[0].is_zero()) c[0] = CRat{1};
    return make_polynomial_germ(std::move(c), truncation);
  }
};

// Brute-force oracle: j-th derivative of log f as a series, computed purely
// by series manipulation (derivative of f times reciprocal of f, then
// repeated differentiation), evaluated at 0.
CRat log_derivative_oracle(const ExactGerm& f, int j) {
  ExactSeries g = f.series.derivative() * f.series.reciprocal();
  for (int i = 1; i < j; ++i) g = g.derivative();
  return g[0];
}

}  // namespace

TEST_CASE("weight_of: single coordinates and products") {
  CHECK(coord(CoordKind::Plain, 1, 1).weight() == 1);  // dz_1
  JetPolynomial p = coord(CoordKind::Log, 1, 3) * coord(CoordKind::Plain, 2, 1).pow(2);
  CHECK(p.weight() == 5);  // (d^3 log z_1)(dz_2)^2
  JetPolynomial mixed = coord(CoordKind::Plain, 1, 1) + coord(CoordKind::Plain, 1, 2);
  CHECK_FALSE(mixed.weight().has_value());
  CHECK(JetPolynomial::zero().weight() == 0);
}

TEST_CASE("faa_di_bruno_log: frozen low orders") {
  // j=1: d log z = dz/z
  CHECK(faa_di_bruno_log(1, 1) == coord(CoordKind::Plain, 1, 1));
  // j=2: d^2 z/z - (dz/z)^2
  JetPolynomial expected2 =
      coord(CoordKind::Plain, 1, 2) - coord(CoordKind::Plain, 1, 1).pow(2);
  CHECK(faa_di_bruno_log(1, 2) == expected2);
  // j=3: d^3 z/z - 3 (d^2 z/z)(dz/z) + 2 (dz/z)^3
  JetPolynomial expected3 = coord(CoordKind::Plain, 1, 3) -
                            CRat{3} * (coord(CoordKind::Plain, 1, 2) * coord(CoordKind::Plain, 1, 1)) +
                            CRat{2} * coord(CoordKind::Plain, 1, 1).pow(3);
  CHECK(faa_di_bruno_log(1, 3) == expected3);

  CHECK_THROWS_AS(faa_di_bruno_log(1, 0), DomainError);
  CHECK_THROWS_AS(faa_di_bruno_log(1, 7), DomainError);
}

TEST_CASE("faa_di_bruno_log: isobaric with integer coefficients, matches series oracle") {
  Rng rng;
  ExactGerm f = rng.polynomial_germ(8, 16, true);
  for (int j = 1; j <= 6; ++j) {
    JetPolynomial p = faa_di_bruno_log(1, j);
    CHECK(p.weight() == j);
    for (const auto& term : p.terms()) {
      CHECK(term.coeff.is_real());
      CHECK(denominator(term.coeff.re) == 1);
    }
    // evaluate on the quotient jet of f at 0 and compare with the oracle
    std::vector<ExactGerm> tuple = {f};
    CRat via_expansion = evaluate(p, jet_of(tuple, 6, CRat{}, {1}));
    CHECK(via_expansion == log_derivative_oracle(f, j));
  }
}

TEST_CASE("faa_di_bruno_inverse: frozen low orders and round-trip identity") {
  CHECK(faa_di_bruno_inverse(1, 1) == coord(CoordKind::Log, 1, 1));
  JetPolynomial expected2 = coord(CoordKind::Log, 1, 2) + coord(CoordKind::Log, 1, 1).pow(2);
  CHECK(faa_di_bruno_inverse(1, 2) == expected2);

  // substituting the inverse expansion into the log expansion returns the
  // single log coordinate, exactly, for every order
  for (int j = 1; j <= 6; ++j) {
    JetPolynomial log_in_quotients = faa_di_bruno_log(1, j);
    std::map<JetCoordinate, JetPolynomial> table;
    for (int s = 1; s <= j; ++s) table[plain(1, s)] = faa_di_bruno_inverse(1, s);
    CHECK(log_in_quotients.substitute(table) == coord(CoordKind::Log, 1, j));
  }
}

TEST_CASE("convert_trivialization: examples and involution") {
  CHECK(convert_trivialization(coord(CoordKind::Log, 1, 1), Trivialization::QuotientBasis) ==
        coord(CoordKind::Plain, 1, 1));
  JetPolynomial d2log = coord(CoordKind::Log, 1, 2);
  CHECK(convert_trivialization(d2log, Trivialization::QuotientBasis) ==
        coord(CoordKind::Plain, 1, 2) - coord(CoordKind::Plain, 1, 1).pow(2));

  // random isobaric polynomial of weight 6 in log coordinates of two
  // variables: forth-then-back is the identity
  Rng rng;
  JetPolynomial p;
  for (int t = 0; t < 8; ++t) {
    // random weight-6 monomial: partition 6 into parts tagged by variable
    std::vector<std::pair<JetCoordinate, int>> factors;
    int remaining = 6;
    while (remaining > 0) {
      int order = static_cast<int>(rng.small(1, remaining));
      int var = static_cast<int>(rng.small(1, 2));
      factors.emplace_back(logc(var, order), 1);
      remaining -= order;
    }
    p = p + JetPolynomial({JetMonomial(rng.coefficient(), factors)});
  }
  REQUIRE(p.weight() == 6);
  JetPolynomial quotient = convert_trivialization(p, Trivialization::QuotientBasis);
  CHECK(quotient.weight() == 6);
  CHECK(convert_trivialization(quotient, Trivialization::LogBasis) == p);

  JetPolynomial mixed = coord(CoordKind::Log, 1, 1) + coord(CoordKind::Log, 1, 2);
  CHECK_THROWS_AS(convert_trivialization(mixed, Trivialization::QuotientBasis), DomainError);
}

TEST_CASE("isobaric closure under products") {
  Rng rng;
  for (int trial = 0; trial < 20; ++trial) {
    int wa = static_cast<int>(rng.small(1, 4));
    int wb = static_cast<int>(rng.small(1, 4));
    JetPolynomial a = coord(CoordKind::Plain, 1, wa) +
                      rng.coefficient() * coord(CoordKind::Log, 2, wa);
    JetPolynomial b = coord(CoordKind::Plain, 2, wb) +
                      rng.coefficient() * coord(CoordKind::Plain, 1, 1).pow(wb);
    JetPolynomial product = a * b;
    if (product.is_zero()) continue;
    CHECK(product.weight() == wa + wb);
  }
}

TEST_CASE("homothety_weight_check: identity, chain rule, Wronskian") {
  // lambda = 1 on arbitrary data
  Rng rng;
  std::vector<ExactGerm> anyf = {rng.polynomial_germ(3, 16, false)};
  CHECK(homothety_weight_check(coord(CoordKind::Plain, 1, 2), 2, anyf, CRat{1},
                               CRat{Rational(1, 7)}));

  // p = dz, f = z^2, lambda = 2, z = 3/10: (f o phi)'(z) = lambda f'(lambda z)
  std::vector<ExactGerm> fsq = {make_polynomial_germ({CRat{0}, CRat{0}, CRat{1}}, 8)};
  CHECK(homothety_weight_check(coord(CoordKind::Plain, 1, 1), 1, fsq, CRat{2},
                               CRat{Rational(3, 10)}));

  // Wronskian differential for n = 2 (weight 3) on random cubic germs,
  // lambda = 1 + i
  JetPolynomial wron = coord(CoordKind::Plain, 1, 1) * coord(CoordKind::Plain, 2, 2) -
                       coord(CoordKind::Plain, 2, 1) * coord(CoordKind::Plain, 1, 2);
  std::vector<ExactGerm> cubics = {rng.polynomial_germ(3, 16, false),
                                   rng.polynomial_germ(3, 16, false)};
  CHECK(homothety_weight_check(wron, 3, cubics, CRat(1, 1), CRat{Rational(1, 3)}));

  // weight mismatch is a domain error
  CHECK_THROWS_AS(homothety_weight_check(wron, 2, cubics, CRat{2}, CRat{Rational(1, 3)}),
                  DomainError);
}

TEST_CASE("homothety homogeneity holds for log coordinates too") {
  Rng rng;
  // isobaric weight-4 polynomial mixing log and quotient coordinates of a
  // divisor variable with plain coordinates of a second variable
  JetPolynomial p = coord(CoordKind::Log, 1, 2) * coord(CoordKind::Plain, 2, 2) +
                    CRat{3} * coord(CoordKind::Log, 1, 1).pow(2) * coord(CoordKind::Plain, 2, 1).pow(2);
  REQUIRE(p.weight() == 4);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<ExactGerm> germs = {rng.polynomial_germ(4, 16, true),
                                    rng.polynomial_germ(4, 16, false)};
    CHECK(homothety_weight_check(p, 4, germs, CRat(2, 1), CRat{Rational(1, 5)}, {1}));
  }
}

TEST_CASE("canonical printing is deterministic") {
  JetPolynomial p = CRat{3} * (coord(CoordKind::Log, 1, 2) * coord(CoordKind::Plain, 2, 1).pow(2));
  CHECK(p.to_string() == "3*(dlog[1]^2)*(d[2]^1)^2");
}
