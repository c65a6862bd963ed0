#ifndef JETLAB_JET_POLYNOMIAL_HPP
#define JETLAB_JET_POLYNOMIAL_HPP

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jetlab/numeric.hpp"

namespace jetlab {

// Default maximum jet order; term counts of the order-j expansions grow like
// partition numbers, so this stays small.
inline constexpr int kDefaultJetOrder = 6;

// A single jet symbol. Plain on an ordinary variable means d^j z_i; Plain on
// a divisor variable means the quotient symbol (d^j z_i)/z_i, which is a
// first-class coordinate of its own weight. Log means d^j log z_i and only
// occurs on divisor variables. The weight is the derivative order in every
// case.
enum class CoordKind { Plain, Log };

struct JetCoordinate {
  CoordKind kind = CoordKind::Plain;
  int var = 1;    // variable index, 1-based
  int order = 1;  // derivative order j >= 1

  int weight() const { return order; }

  friend auto operator<=>(const JetCoordinate& a, const JetCoordinate& b) {
    return std::tie(a.var, a.kind, a.order) <=> std::tie(b.var, b.kind, b.order);
  }
  friend bool operator==(const JetCoordinate&, const JetCoordinate&) = default;
};

inline JetCoordinate plain(int var, int order) { return {CoordKind::Plain, var, order}; }
inline JetCoordinate logc(int var, int order) { return {CoordKind::Log, var, order}; }

// Product of jet coordinates with an exact coefficient. Factors are kept
// sorted by (var, kind, order) with positive exponents.
struct JetMonomial {
  CRat coeff;
  std::vector<std::pair<JetCoordinate, int>> factors;

  JetMonomial() = default;
  JetMonomial(CRat c, std::vector<std::pair<JetCoordinate, int>> f);

  int weight() const;
  // Total polynomial degree in the coordinates.
  int degree() const;

  friend bool operator==(const JetMonomial&, const JetMonomial&) = default;
};

// Weighted polynomial in jet coordinates, kept in canonical form: terms
// sorted lexicographically by factor list, zero coefficients dropped.
class JetPolynomial {
 public:
  JetPolynomial() = default;
  explicit JetPolynomial(std::vector<JetMonomial> terms);

  static JetPolynomial zero() { return {}; }
  static JetPolynomial constant(CRat c);
  static JetPolynomial coordinate(JetCoordinate c);

  const std::vector<JetMonomial>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  // Common weight of all terms, nullopt when mixed. The zero polynomial has
  // weight 0 by convention.
  std::optional<int> weight() const;
  bool is_isobaric() const { return weight().has_value(); }

  friend JetPolynomial operator+(const JetPolynomial& a, const JetPolynomial& b);
  friend JetPolynomial operator-(const JetPolynomial& a, const JetPolynomial& b);
  friend JetPolynomial operator-(const JetPolynomial& a);
  friend JetPolynomial operator*(const JetPolynomial& a, const JetPolynomial& b);
  friend JetPolynomial operator*(const CRat& s, const JetPolynomial& a);
  friend bool operator==(const JetPolynomial&, const JetPolynomial&) = default;

  JetPolynomial pow(int e) const;

  // Replaces each coordinate present in `table` by the given polynomial;
  // coordinates absent from the table are kept.
  JetPolynomial substitute(const std::map<JetCoordinate, JetPolynomial>& table) const;

  // All coordinates appearing in the polynomial.
  std::vector<JetCoordinate> support() const;

  std::string to_string() const;

 private:
  void normalize();
  std::vector<JetMonomial> terms_;
};

std::string to_string(const JetCoordinate& c);
std::string to_string(const JetMonomial& m);

}  // namespace jetlab

#endif
