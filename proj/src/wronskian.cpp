#include "jetlab/wronskian.hpp"

#include <algorithm>

#include "jetlab/errors.hpp"
#include "jetlab/faa_di_bruno.hpp"

namespace jetlab {

Rational rational_det(std::vector<std::vector<Rational>> m) {
  size_t n = m.size();
  Rational det = 1;
  for (size_t col = 0; col < n; ++col) {
    size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return Rational(0);
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    Rational inv = Rational(1) / m[col][col];
    for (size_t row = col + 1; row < n; ++row) {
      if (m[row][col] == 0) continue;
      Rational factor = m[row][col] * inv;
      for (size_t j = col; j < n; ++j) m[row][j] -= factor * m[col][j];
    }
  }
  return det;
}

namespace {

void validate_arrangement(const HyperplaneArrangement& a) {
  if (a.n < 1) throw DomainError("arrangement: n must be >= 1");
  for (const auto& form : a.forms)
    if (static_cast<int>(form.size()) != a.n + 1)
      throw DomainError("arrangement: each form needs n+1 coefficients");
}

bool subsets_nonsingular(const HyperplaneArrangement& a) {
  int q = a.count();
  int m = a.n + 1;
  std::vector<int> idx(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) idx[static_cast<size_t>(i)] = i;

  while (true) {
    std::vector<std::vector<Rational>> sub;
    sub.reserve(static_cast<size_t>(m));
    for (int i : idx) sub.push_back(a.forms[static_cast<size_t>(i)]);
    if (rational_det(std::move(sub)) == 0) return false;

    // next combination
    int pos = m - 1;
    while (pos >= 0 && idx[static_cast<size_t>(pos)] == q - m + pos) --pos;
    if (pos < 0) break;
    ++idx[static_cast<size_t>(pos)];
    for (int j = pos + 1; j < m; ++j)
      idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
  }
  return true;
}

// Determinant of a matrix of jet polynomials by cofactor expansion along the
// first row. Sizes stay <= 5 in every application.
JetPolynomial jet_poly_det(const std::vector<std::vector<JetPolynomial>>& m) {
  size_t n = m.size();
  if (n == 1) return m[0][0];
  JetPolynomial det;
  for (size_t col = 0; col < n; ++col) {
    std::vector<std::vector<JetPolynomial>> minor;
    minor.reserve(n - 1);
    for (size_t row = 1; row < n; ++row) {
      std::vector<JetPolynomial> r;
      r.reserve(n - 1);
      for (size_t c = 0; c < n; ++c)
        if (c != col) r.push_back(m[row][c]);
      minor.push_back(std::move(r));
    }
    JetPolynomial term = m[0][col] * jet_poly_det(minor);
    det = (col % 2 == 0) ? det + term : det - term;
  }
  return det;
}

}  // namespace

bool check_general_position(const HyperplaneArrangement& a) {
  validate_arrangement(a);
  if (a.count() < a.n + 1)
    throw DomainError("check_general_position: fewer than n+1 hyperplanes");
  return subsets_nonsingular(a);
}

HyperplaneArrangement vandermonde_arrangement(int n, int q) {
  HyperplaneArrangement a;
  a.n = n;
  for (int i = 1; i <= q; ++i) {
    std::vector<Rational> form(static_cast<size_t>(n) + 1);
    Rational t = 1;
    for (int j = 0; j <= n; ++j) {
      form[static_cast<size_t>(j)] = t;
      t *= i;
    }
    a.forms.push_back(std::move(form));
  }
  return a;
}

WronskianDifferential build_wronskian(const HyperplaneArrangement& a, int jet_order) {
  validate_arrangement(a);
  int n = a.n;
  int q = a.count();
  if (jet_order < 0) jet_order = n;
  if (jet_order < n)
    throw DomainError("build_wronskian: jet order below the Wronskian row count");
  if (!check_general_position(a))
    throw InvalidArrangementError("build_wronskian: hyperplanes not in general position");

  std::vector<std::vector<JetPolynomial>> m(static_cast<size_t>(n));
  for (int row = 1; row <= n; ++row) {
    auto& r = m[static_cast<size_t>(row - 1)];
    r.reserve(static_cast<size_t>(n));
    for (int col = 1; col <= n; ++col)
      r.push_back(JetPolynomial::coordinate(plain(col, row)));
  }

  WronskianDifferential w;
  w.arrangement = a;
  w.numerator = jet_poly_det(m);
  w.jet_order = jet_order;
  w.weight = n * (n + 1) / 2;
  w.vanishing_order = q - (n + 1);
  return w;
}

LocalLogForm local_log_form(const WronskianDifferential& w, const std::vector<int>& index_set) {
  int n = w.arrangement.n;
  int q = w.arrangement.count();
  if (static_cast<int>(index_set.size()) != n)
    throw DomainError("local_log_form: index set must have size n");
  for (int i : index_set)
    if (i < 1 || i > q) throw DomainError("local_log_form: index out of range");

  // basis-change matrix: linear parts of the chosen forms
  std::vector<std::vector<Rational>> linear(static_cast<size_t>(n));
  for (int s = 0; s < n; ++s) {
    const auto& form = w.arrangement.forms[static_cast<size_t>(index_set[static_cast<size_t>(s)] - 1)];
    linear[static_cast<size_t>(s)] = std::vector<Rational>(form.begin() + 1, form.end());
  }
  Rational det = rational_det(linear);
  if (det == 0)
    throw DomainError("local_log_form: chosen forms are linearly dependent");

  // M[a][s] = (d^a F_{i_s}) / F_{i_s} expanded in the log coordinates of
  // hyperplane variable i_s
  std::vector<std::vector<JetPolynomial>> m(static_cast<size_t>(n));
  for (int row = 1; row <= n; ++row) {
    auto& r = m[static_cast<size_t>(row - 1)];
    for (int s = 0; s < n; ++s)
      r.push_back(faa_di_bruno_inverse(index_set[static_cast<size_t>(s)], row,
                                       std::max(kDefaultJetOrder, row)));
  }

  LocalLogForm form;
  form.index_set = index_set;
  form.log_polynomial = jet_poly_det(m);
  form.constant = CRat{Rational(1) / det};
  return form;
}

bool verify_local_log_form(const WronskianDifferential& w, const LocalLogForm& form,
                           const std::vector<ExactGerm>& coordinate_germs, const CRat& z) {
  int n = w.arrangement.n;
  if (static_cast<int>(coordinate_germs.size()) != n)
    throw DomainError("verify_local_log_form: need one germ per coordinate");

  // left side: the global numerator on the plain jet of x
  CRat lhs = evaluate(w.numerator, jet_of(coordinate_germs, n, z));

  // right side: constant * prod F_i(x(z)) * det(M) on the log jets of F o x
  CRat rhs = form.constant;
  JetVector<CRat> log_jet;
  for (int s = 0; s < n; ++s) {
    int hyperplane = form.index_set[static_cast<size_t>(s)];
    const auto& coeff = w.arrangement.forms[static_cast<size_t>(hyperplane - 1)];
    // F o x is an affine combination of the coordinate germs
    int order = coordinate_germs[0].truncation_order();
    ExactSeries composed = ExactSeries::constant(CRat{coeff[0]}, order);
    for (int b = 0; b < n; ++b)
      composed = composed +
                 CRat{coeff[static_cast<size_t>(b) + 1]} * coordinate_germs[static_cast<size_t>(b)].series;
    std::vector<ExactGerm> single = {ExactGerm(composed)};
    JetVector<CRat> jv = jet_of(single, n, z, {1});
    for (const auto& [coord, value] : jv.values)
      log_jet.values[JetCoordinate{coord.kind, hyperplane, coord.order}] = value;
    rhs *= composed.eval(z);  // F(x(z))
  }
  rhs *= evaluate(form.log_polynomial, log_jet);
  return lhs == rhs;
}

std::pair<long, long> recover_fujimoto_weight(long n, long q) {
  if (n < 1) throw DomainError("recover_fujimoto_weight: n must be >= 1");
  if (q < n + 2) throw DomainError("recover_fujimoto_weight: need q >= n+2");
  return {n * (n + 1) / 2, q - (n + 1)};
}

}  // namespace jetlab
