#include "doctest.h"

#include "jetlab/errors.hpp"
#include "jetlab/faa_di_bruno.hpp"
#include "jetlab/io.hpp"

using namespace jetlab;

TEST_CASE("format_double round trips") {
  for (double v : {0.1, 1.0 / 3.0, 2.0, -1.7e-12, 0.0}) {
    CHECK(std::stod(format_double(v)) == v);
  }
}

TEST_CASE("jet polynomial grammar") {
  JetPolynomial p = parse_jet_polynomial("3*(dlog[1]^2)^1*(d[2]^1)^2");
  JetPolynomial expected =
      CRat{3} * (JetPolynomial::coordinate(logc(1, 2)) *
                 JetPolynomial::coordinate(plain(2, 1)).pow(2));
  CHECK(p == expected);
  CHECK(p.weight() == 4);

  // signs, rational complex coefficients, bare coordinates
  JetPolynomial q = parse_jet_polynomial("d[1]^2 - (1/2+1/3*I)*(d[1]^1)^2");
  CHECK(q.weight() == 2);
  CHECK(q.terms().size() == 2);

  // parse -> print -> parse is the identity on canonical forms
  CHECK(parse_jet_polynomial(p.to_string()) == p);
  CHECK(parse_jet_polynomial(q.to_string()) == q);

  CHECK_THROWS_AS(parse_jet_polynomial("d[1"), DomainError);
  CHECK_THROWS_AS(parse_jet_polynomial("w[1]^2"), DomainError);
}

TEST_CASE("faa expansions print through the same grammar") {
  JetPolynomial p = faa_di_bruno_log(1, 3);
  CHECK(parse_jet_polynomial(p.to_string()) == p);
}

TEST_CASE("germ literals") {
  ExactGerm poly = parse_germ("1 + 2*z - z^3", 8);
  CHECK(poly.series[0] == CRat{1});
  CHECK(poly.series[1] == CRat{2});
  CHECK(poly.series[3] == CRat{-1});
  CHECK(poly.series[4].is_zero());

  ExactGerm e = parse_germ("exp(z)", 6);
  CHECK(e.series[3] == CRat{Rational(1, 6)});

  ExactGerm geo = parse_germ("1/(1-z)", 6);
  for (int j = 0; j <= 6; ++j) CHECK(geo.series[j] == CRat{1});
  CHECK(geo.radius == doctest::Approx(1.0));

  CHECK_THROWS_AS(parse_germ("1/z", 6), PoleError);
}

TEST_CASE("rational function literals") {
  RationalFn f = parse_rational_fn("(1-z^2)/(2*z^2)");
  std::complex<double> z(0.4, 0.1);
  std::complex<double> expect = (1.0 - z * z) / (2.0 * z * z);
  CHECK(std::abs(f.eval(z) - expect) < 1e-14);
}

TEST_CASE("arrangement json round trip") {
  HyperplaneArrangement a =
      arrangement_from_json(R"({"n": 2, "forms": [["1","1","0"], ["1","0","1"], ["1","1","1"], ["1","1/3","-1"]]})");
  CHECK(a.n == 2);
  CHECK(a.count() == 4);
  CHECK(a.forms[3][1] == Rational(1, 3));
  HyperplaneArrangement b = arrangement_from_json(arrangement_to_json(a));
  CHECK(b.forms == a.forms);
}

TEST_CASE("curve and hypersurface json") {
  ProjectiveCurve f = curve_from_json(R"({"components": [["1"], ["0","1"]], "r_max": 0.9})");
  CHECK(f.dimension() == 1);
  CHECK(f.r_max() == doctest::Approx(0.9));

  ProjectiveCurve g = curve_from_json(
      R"({"components": [{"num": ["1"], "den": ["1","-1"]}, ["0","1"]], "r_max": 0.9})");
  CHECK(g.dimension() == 1);

  Hypersurface q = hypersurface_from_json(
      R"({"n": 1, "terms": [{"exponents": [0, 2], "coeff": "1"}, {"exponents": [2, 0], "coeff": "-1/4"}]})");
  CHECK(q.degree() == 2);

  CHECK_THROWS_AS(
      hypersurface_from_json(R"({"n": 1, "terms": [{"exponents": [0, 1], "coeff": "1"},
                                                   {"exponents": [2, 0], "coeff": "1"}]})"),
      DomainError);
}

TEST_CASE("surface json") {
  WeierstrassSurface plane = surface_from_json(R"({"preset": "plane"})");
  CHECK(plane.phi.size() == 3);
  WeierstrassSurface w =
      surface_from_json(R"({"weierstrass": {"F": "1", "G": "z"}})");
  CHECK(w.phi.size() == 3);
  CHECK_THROWS_AS(surface_from_json(R"({"preset": "torus"})"), DomainError);
}
