#include "jetlab/io.hpp"

#include <cctype>
#include <charconv>
#include <cmath>

#include <nlohmann/json.hpp>

#include "jetlab/errors.hpp"

namespace jetlab {

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc{}) throw Error("format_double: conversion failed");
  return std::string(buf, ptr);
}

namespace {

// Shared lexer for the polynomial grammars.
struct Lexer {
  enum class Kind { Number, Ident, Symbol, End };
  struct Token {
    Kind kind;
    std::string text;
  };

  explicit Lexer(const std::string& text) : src_(text) { advance(); }

  const Token& peek() const { return current_; }
  Token take() {
    Token t = current_;
    advance();
    return t;
  }
  bool accept_symbol(char c) {
    if (current_.kind == Kind::Symbol && current_.text[0] == c) {
      advance();
      return true;
    }
    return false;
  }
  void expect_symbol(char c) {
    if (!accept_symbol(c))
      throw DomainError(std::string("parse: expected '") + c + "' near '" + current_.text + "'");
  }

 private:
  void advance() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    if (pos_ >= src_.size()) {
      current_ = {Kind::End, ""};
      return;
    }
    char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      current_ = {Kind::Number, src_.substr(start, pos_ - start)};
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < src_.size() && std::isalpha(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      current_ = {Kind::Ident, src_.substr(start, pos_ - start)};
      return;
    }
    current_ = {Kind::Symbol, std::string(1, c)};
    ++pos_;
  }

  std::string src_;
  size_t pos_ = 0;
  Token current_;
};

long parse_long(const std::string& s) {
  long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw DomainError("parse: bad integer '" + s + "'");
  return v;
}

// Recursive-descent expression parser shared by the jet polynomial and the
// rational-function grammars. Algebra supplies the atoms.
template <class Algebra>
class ExprParser {
 public:
  using Value = typename Algebra::Value;

  explicit ExprParser(const std::string& text) : lex_(text) {}

  Value parse() {
    Value v = sum();
    if (lex_.peek().kind != Lexer::Kind::End)
      throw DomainError("parse: trailing input near '" + lex_.peek().text + "'");
    return v;
  }

 private:
  Value sum() {
    bool neg = false;
    if (lex_.accept_symbol('-'))
      neg = true;
    else
      lex_.accept_symbol('+');
    Value acc = product();
    if (neg) acc = Algebra::negate(acc);
    while (true) {
      if (lex_.accept_symbol('+'))
        acc = Algebra::add(acc, product());
      else if (lex_.accept_symbol('-'))
        acc = Algebra::sub(acc, product());
      else
        return acc;
    }
  }

  Value product() {
    Value acc = power();
    while (true) {
      if (lex_.accept_symbol('*'))
        acc = Algebra::mul(acc, power());
      else if (lex_.accept_symbol('/'))
        acc = Algebra::div(acc, power());
      else
        return acc;
    }
  }

  Value power() {
    Value base = atom();
    if (lex_.accept_symbol('^')) {
      auto t = lex_.take();
      if (t.kind != Lexer::Kind::Number)
        throw DomainError("parse: exponent must be a nonnegative integer");
      base = Algebra::pow(base, parse_long(t.text));
    }
    return base;
  }

  Value atom() {
    auto t = lex_.peek();
    if (t.kind == Lexer::Kind::Symbol && t.text == "(") {
      lex_.take();
      Value v = sum();
      lex_.expect_symbol(')');
      return v;
    }
    if (t.kind == Lexer::Kind::Number) {
      lex_.take();
      return Algebra::number(Rational(BigInt(t.text)));
    }
    if (t.kind == Lexer::Kind::Ident) {
      lex_.take();
      if (t.text == "I") return Algebra::imaginary_unit();
      if (t.text == "d" || t.text == "dlog") {
        // coordinate: d[i]^j / dlog[i]^j; the ^ is the derivative order
        lex_.expect_symbol('[');
        auto idx = lex_.take();
        if (idx.kind != Lexer::Kind::Number)
          throw DomainError("parse: coordinate index must be an integer");
        lex_.expect_symbol(']');
        long order = 1;
        if (lex_.accept_symbol('^')) {
          auto ord = lex_.take();
          if (ord.kind != Lexer::Kind::Number)
            throw DomainError("parse: derivative order must be an integer");
          order = parse_long(ord.text);
        }
        return Algebra::coordinate(t.text == "dlog", parse_long(idx.text), order);
      }
      return Algebra::variable(t.text);
    }
    throw DomainError("parse: unexpected token '" + t.text + "'");
  }

  Lexer lex_;
};

struct JetAlgebra {
  using Value = JetPolynomial;
  static Value number(Rational q) { return JetPolynomial::constant(CRat{std::move(q)}); }
  static Value imaginary_unit() { return JetPolynomial::constant(CRat::i()); }
  static Value variable(const std::string& name) {
    throw DomainError("jet polynomial: unknown symbol '" + name + "'");
  }
  static Value coordinate(bool log_kind, long var, long order) {
    if (var < 1 || order < 1) throw DomainError("jet polynomial: bad coordinate");
    return JetPolynomial::coordinate(
        {log_kind ? CoordKind::Log : CoordKind::Plain, static_cast<int>(var),
         static_cast<int>(order)});
  }
  static Value add(const Value& a, const Value& b) { return a + b; }
  static Value sub(const Value& a, const Value& b) { return a - b; }
  static Value mul(const Value& a, const Value& b) { return a * b; }
  static Value negate(const Value& a) { return -a; }
  static Value pow(const Value& a, long e) {
    if (e < 0) throw DomainError("jet polynomial: negative power");
    return a.pow(static_cast<int>(e));
  }
  static Value div(const Value& a, const Value& b) {
    // division only by constants
    if (b.terms().size() != 1 || !b.terms()[0].factors.empty())
      throw DomainError("jet polynomial: division only by constants");
    return (CRat{1} / b.terms()[0].coeff) * a;
  }
};

struct RationalFnAlgebra {
  using Value = RationalFn;
  static Value number(Rational q) {
    return RationalFn::from_poly(Poly::constant(CRat{std::move(q)}));
  }
  static Value imaginary_unit() { return RationalFn::from_poly(Poly::constant(CRat::i())); }
  static Value variable(const std::string& name) {
    if (name == "z") return RationalFn::from_poly(Poly::monomial(CRat{1}, 1));
    throw DomainError("expression: unknown symbol '" + name + "'");
  }
  static Value coordinate(bool, long, long) {
    throw DomainError("expression: jet coordinates not allowed here");
  }
  static Value add(const Value& a, const Value& b) { return a + b; }
  static Value sub(const Value& a, const Value& b) { return a - b; }
  static Value mul(const Value& a, const Value& b) { return a * b; }
  static Value negate(const Value& a) {
    return RationalFn(-a.num(), a.den());
  }
  static Value pow(const Value& a, long e) {
    if (e < 0) throw DomainError("expression: negative power");
    return RationalFn(a.num().pow(static_cast<int>(e)), a.den().pow(static_cast<int>(e)));
  }
  static Value div(const Value& a, const Value& b) { return a / b; }
};

std::string strip(const std::string& s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

}  // namespace

JetPolynomial parse_jet_polynomial(const std::string& text) {
  return ExprParser<JetAlgebra>(text).parse();
}

RationalFn parse_rational_fn(const std::string& text) {
  return ExprParser<RationalFnAlgebra>(text).parse();
}

ExactGerm parse_germ(const std::string& text, int truncation_order) {
  if (strip(text) == "exp(z)") return make_exp_germ(truncation_order);

  RationalFn fn = parse_rational_fn(text);
  if (fn.is_polynomial())
    return make_polynomial_germ(fn.num().coefficients(), truncation_order);

  // expand num/den as a truncated series; valid inside the nearest pole
  if (fn.den().order_at_origin() != 0)
    throw PoleError("parse_germ: expression has a pole at 0");
  std::vector<CRat> num_coeff = fn.num().coefficients();
  num_coeff.resize(static_cast<size_t>(truncation_order) + 1, CRat{});
  std::vector<CRat> den_coeff = fn.den().coefficients();
  den_coeff.resize(static_cast<size_t>(truncation_order) + 1, CRat{});
  ExactSeries series =
      ExactSeries(std::move(num_coeff)) * ExactSeries(std::move(den_coeff)).reciprocal();

  double radius = std::numeric_limits<double>::infinity();
  for (const auto& root : roots_with_multiplicity(fn.den()))
    radius = std::min(radius, std::abs(root.location));
  return ExactGerm(std::move(series), radius);
}

namespace {

using nlohmann::json;

Rational json_rational(const json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (v.is_number_float()) return parse_rational(format_double(v.get<double>()));
  throw DomainError("json: expected rational as string or integer");
}

CRat json_crat(const json& v) {
  if (v.is_string()) return parse_crat(v.get<std::string>());
  if (v.is_number_integer()) return CRat{Rational(v.get<long>())};
  throw DomainError("json: expected coefficient as string or integer");
}

Poly json_poly(const json& v) {
  if (!v.is_array()) throw DomainError("json: polynomial must be a coefficient array");
  std::vector<CRat> coeff;
  for (const auto& c : v) coeff.push_back(json_crat(c));
  return Poly(std::move(coeff));
}

}  // namespace

HyperplaneArrangement arrangement_from_json(const std::string& json_text) {
  json j = json::parse(json_text);
  HyperplaneArrangement a;
  a.n = j.at("n").get<int>();
  for (const auto& form : j.at("forms")) {
    std::vector<Rational> coeff;
    for (const auto& c : form) coeff.push_back(json_rational(c));
    a.forms.push_back(std::move(coeff));
  }
  return a;
}

std::string arrangement_to_json(const HyperplaneArrangement& a) {
  json j;
  j["n"] = a.n;
  j["forms"] = json::array();
  for (const auto& form : a.forms) {
    json row = json::array();
    for (const auto& c : form) row.push_back(to_string(c));
    j["forms"].push_back(row);
  }
  return j.dump();
}

ProjectiveCurve curve_from_json(const std::string& json_text) {
  json j = json::parse(json_text);
  double r_max = j.value("r_max", 0.95);
  std::vector<RationalFn> comps;
  for (const auto& c : j.at("components")) {
    if (c.is_array())
      comps.push_back(RationalFn::from_poly(json_poly(c)));
    else if (c.is_object())
      comps.emplace_back(json_poly(c.at("num")), json_poly(c.at("den")));
    else if (c.is_string())
      comps.push_back(parse_rational_fn(c.get<std::string>()));
    else
      throw DomainError("json: bad curve component");
  }
  return ProjectiveCurve::from_rational(comps, r_max);
}

Hypersurface hypersurface_from_json(const std::string& json_text) {
  json j = json::parse(json_text);
  int n = j.at("n").get<int>();
  std::vector<Hypersurface::Term> terms;
  for (const auto& t : j.at("terms")) {
    Hypersurface::Term term;
    term.exponents = t.at("exponents").get<std::vector<int>>();
    term.coeff = json_crat(t.at("coeff"));
    terms.push_back(std::move(term));
  }
  return Hypersurface(n, std::move(terms));
}

WeierstrassSurface surface_from_json(const std::string& json_text) {
  json j = json::parse(json_text);
  double radius = j.value("admissible_radius", 0.95);
  if (j.contains("preset")) {
    std::string preset = j.at("preset").get<std::string>();
    if (preset == "plane") return plane_surface();
    if (preset == "enneper") return enneper_surface();
    throw DomainError("json: unknown surface preset '" + preset + "'");
  }
  if (j.contains("weierstrass")) {
    const auto& w = j.at("weierstrass");
    return weierstrass_surface(parse_rational_fn(w.at("F").get<std::string>()),
                               parse_rational_fn(w.at("G").get<std::string>()), radius);
  }
  if (j.contains("phi")) {
    WeierstrassSurface s;
    s.admissible_radius = radius;
    for (const auto& p : j.at("phi")) s.phi.push_back(parse_rational_fn(p.get<std::string>()));
    s.n = static_cast<int>(s.phi.size());
    return s;
  }
  throw DomainError("json: surface needs 'preset', 'weierstrass', or 'phi'");
}

}  // namespace jetlab
