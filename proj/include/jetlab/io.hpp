#ifndef JETLAB_IO_HPP
#define JETLAB_IO_HPP

#include <string>
#include <vector>

#include "jetlab/germ.hpp"
#include "jetlab/jet_polynomial.hpp"
#include "jetlab/minimal_geometry.hpp"
#include "jetlab/nevanlinna.hpp"
#include "jetlab/wronskian.hpp"

namespace jetlab {

// Shortest decimal representation that round-trips to the same double.
std::string format_double(double v);

// Jet polynomial grammar, e.g. 3*(dlog[1]^2)^1*(d[2]^1)^2 for
// 3 (d^2 log z_1) (d z_2)^2:
//
//   polynomial := term (('+'|'-') term)*
//   term       := (coefficient '*')? factor ('*' factor)*  |  coefficient
//   factor     := '(' coordinate ')' ('^' nat)?  |  coordinate
//   coordinate := ('d'|'dlog') '[' nat ']' ('^' nat)?   -- the ^ here is the
//                                                          derivative order
//   coefficient := complex rational: "3", "-1/2", "1+2*I", "3/4-1/3*I", "I"
JetPolynomial parse_jet_polynomial(const std::string& text);

// Germ literals: a polynomial in z like "1 + 2*z - z^3" (complex rational
// coefficients), or the named generators "exp(z)" and "1/(1-z)".
ExactGerm parse_germ(const std::string& text, int truncation_order);

// JSON loaders; exact rationals appear as strings ("1/3").
//   arrangement: {"n": 2, "forms": [["1", "1", "0"], ...]}   (constant first)
//   curve:       {"components": [["0","1"], ...], "r_max": 0.95}
//                or components as {"num": [...], "den": [...]}
//   hypersurface:{"n": 1, "terms": [{"exponents": [0,1], "coeff": "1"}]}
//   surface:     {"preset": "plane"|"enneper"} or
//                {"weierstrass": {"F": "...", "G": "..."}} or {"phi": [...]}
HyperplaneArrangement arrangement_from_json(const std::string& json_text);
ProjectiveCurve curve_from_json(const std::string& json_text);
Hypersurface hypersurface_from_json(const std::string& json_text);
WeierstrassSurface surface_from_json(const std::string& json_text);

// Rational-function literal used in surface JSON: "num/den" with polynomial
// numerator and denominator, e.g. "(1-z^2)/(2*z^2)", or a plain polynomial.
RationalFn parse_rational_fn(const std::string& text);

std::string arrangement_to_json(const HyperplaneArrangement& a);

}  // namespace jetlab

#endif
