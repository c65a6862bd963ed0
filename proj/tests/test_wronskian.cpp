#include "doctest.h"

#include <random>

#include "jetlab/errors.hpp"
#include "jetlab/wronskian.hpp"

using namespace jetlab;

namespace {

HyperplaneArrangement from_longs(int n, std::vector<std::vector<long>> rows) {
  HyperplaneArrangement a;
  a.n = n;
  for (const auto& row : rows) {
    std::vector<Rational> form;
    for (long v : row) form.emplace_back(v);
    a.forms.push_back(std::move(form));
  }
  return a;
}

std::vector<ExactGerm> random_germs(int count, std::mt19937& engine, int degree = 4) {
  std::vector<ExactGerm> out;
  for (int i = 0; i < count; ++i) {
    std::vector<CRat> c(static_cast<size_t>(degree) + 1);
    for (auto& x : c)
      x = CRat(static_cast<long>(engine() % 9) - 4, static_cast<long>(engine() % 3) - 1);
    out.push_back(make_polynomial_germ(std::move(c), 16));
  }
  return out;
}

}  // namespace

TEST_CASE("general position: points on the line and planar families") {
  // n=1: x = 0, x = 1, and the infinity point (homogeneous form z0)
  HyperplaneArrangement line = from_longs(1, {{0, 1}, {-1, 1}, {1, 0}});
  CHECK(check_general_position(line));

  // n=2: x1, x2, x1+x2-1, x1-x2-2 meet only pairwise
  HyperplaneArrangement planes =
      from_longs(2, {{0, 1, 0}, {0, 0, 1}, {-1, 1, 1}, {-2, 1, -1}});
  CHECK(check_general_position(planes));

  // x1, x2, x1+x2-1, x1-x2-1 is NOT in general position: the last three
  // lines all pass through (1, 0)
  HyperplaneArrangement concurrent =
      from_longs(2, {{0, 1, 0}, {0, 0, 1}, {-1, 1, 1}, {-1, 1, -1}});
  CHECK_FALSE(check_general_position(concurrent));

  // duplicate line fails
  HyperplaneArrangement dup = from_longs(2, {{0, 1, 0}, {0, 1, 0}, {-1, 1, 1}, {1, 0, 0}});
  CHECK_FALSE(check_general_position(dup));

  // too few hyperplanes
  HyperplaneArrangement few = from_longs(2, {{0, 1, 0}, {0, 0, 1}});
  CHECK_THROWS_AS(check_general_position(few), DomainError);
}

TEST_CASE("vandermonde arrangements are in general position") {
  for (int n = 1; n <= 3; ++n)
    for (int q = n + 1; q <= n + 5; ++q) CHECK(check_general_position(vandermonde_arrangement(n, q)));
}

TEST_CASE("build_wronskian: symbolic weight n(n+1)/2, exact grading") {
  for (int n = 1; n <= 5; ++n) {
    WronskianDifferential w = build_wronskian(vandermonde_arrangement(n, n + 2));
    CHECK(w.weight == n * (n + 1) / 2);
    CHECK(w.numerator.weight() == n * (n + 1) / 2);
    CHECK(w.vanishing_order == 1);  // q = n+2
  }
}

TEST_CASE("build_wronskian rejects degenerate arrangements") {
  HyperplaneArrangement dup = from_longs(2, {{0, 1, 0}, {0, 1, 0}, {-1, 1, 1}, {1, 0, 0}});
  CHECK_THROWS_AS(build_wronskian(dup), InvalidArrangementError);
}

TEST_CASE("wronskian alternation: swapping coordinate rows negates") {
  // swap the two variables in the n=2 numerator by substitution
  WronskianDifferential w = build_wronskian(vandermonde_arrangement(2, 4));
  std::map<JetCoordinate, JetPolynomial> swap;
  for (int order = 1; order <= 2; ++order) {
    swap[plain(1, order)] = JetPolynomial::coordinate(plain(2, order));
    swap[plain(2, order)] = JetPolynomial::coordinate(plain(1, order));
  }
  CHECK(w.numerator.substitute(swap) == -w.numerator);
}

TEST_CASE("wronskian vanishes on linearly dependent germ tuples") {
  std::mt19937 engine(99);
  WronskianDifferential w = build_wronskian(vandermonde_arrangement(2, 4));
  auto germs = random_germs(1, engine);
  // x2 = 2 x1
  std::vector<ExactGerm> dependent = {germs[0],
                                      ExactGerm(CRat{2} * germs[0].series, germs[0].radius)};
  CRat value = evaluate(w.numerator, jet_of(dependent, 2, CRat{Rational(1, 3)}));
  CHECK(value.is_zero());
}

TEST_CASE("local log form: n=1 is d log F") {
  WronskianDifferential w = build_wronskian(vandermonde_arrangement(1, 3));
  LocalLogForm form = local_log_form(w, {1});
  CHECK(form.log_polynomial == JetPolynomial::coordinate(logc(1, 1)));
  CHECK(form.constant == CRat{1});  // F_1 = 1 + x has unit linear part
}

TEST_CASE("local log form equals the global Wronskian on random jets, n <= 3") {
  std::mt19937 engine(2024);
  for (int n = 1; n <= 3; ++n) {
    WronskianDifferential w = build_wronskian(vandermonde_arrangement(n, n + 3));
    // try a couple of index sets
    std::vector<std::vector<int>> index_sets;
    std::vector<int> first(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) first[static_cast<size_t>(i)] = i + 1;
    index_sets.push_back(first);
    std::vector<int> last(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) last[static_cast<size_t>(i)] = n + 3 - i;
    index_sets.push_back(last);

    for (const auto& index_set : index_sets) {
      LocalLogForm form = local_log_form(w, index_set);
      CHECK(form.log_polynomial.weight() == n * (n + 1) / 2);
      for (int trial = 0; trial < 3; ++trial) {
        auto germs = random_germs(n, engine);
        CHECK(verify_local_log_form(w, form, germs, CRat{Rational(1, 5)}));
      }
    }
  }
}

TEST_CASE("local log form rejects dependent subfamilies") {
  // hyperplanes 1 and 2 are parallel lines: dependent linear parts, yet the
  // whole family is still in general position
  HyperplaneArrangement a =
      from_longs(2, {{0, 1, 0}, {-1, 1, 0}, {0, 0, 1}, {-3, 1, 1}});
  REQUIRE(check_general_position(a));
  WronskianDifferential w = build_wronskian(a);
  CHECK_THROWS_AS(local_log_form(w, {1, 2}), DomainError);
}

TEST_CASE("recover_fujimoto_weight") {
  CHECK(recover_fujimoto_weight(2, 6) == std::pair<long, long>{3, 3});
  CHECK(recover_fujimoto_weight(1, 3) == std::pair<long, long>{1, 1});
  CHECK(recover_fujimoto_weight(3, 16) == std::pair<long, long>{6, 12});
  CHECK_THROWS_AS(recover_fujimoto_weight(2, 3), DomainError);
  // twist condition m~ > 2m exactly when q > n^2 + 2n + 1
  for (long n = 1; n <= 5; ++n) {
    long boundary = n * n + 2 * n + 1;
    auto [m_at, mt_at] = recover_fujimoto_weight(n, boundary);
    CHECK(mt_at <= 2 * m_at);
    auto [m_after, mt_after] = recover_fujimoto_weight(n, boundary + 1);
    CHECK(mt_after > 2 * m_after);
  }
}
