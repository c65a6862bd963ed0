#include "doctest.h"

#include <vector>

#include "jetlab/bounds.hpp"
#include "jetlab/errors.hpp"

using namespace jetlab;

TEST_CASE("jet parameters: worked values and the two r0 forms") {
  JetParameters p2 = jet_parameters(2);
  CHECK(p2.k == 3);
  CHECK(p2.k_prime == 6);
  CHECK(p2.delta == 11);
  CHECK(p2.r0 == 18876);  // 11^2 * 12 * 13
  CHECK(p2.r0_forms_agree);

  JetParameters p1 = jet_parameters(1);
  CHECK(p1.k == 2);
  CHECK(p1.k_prime == 3);
  CHECK(p1.delta == 5);
  CHECK(p1.r0 == 210);  // 5 * 6 * 7
  CHECK(p1.r0_forms_agree);

  // the identity 2k' = delta + 1 behind the two forms holds for every n here
  for (long n = 1; n <= 12; ++n) {
    JetParameters p = jet_parameters(n);
    CHECK(2 * p.k_prime == p.delta + 1);
    CHECK(p.r0_forms_agree);
  }
  CHECK_THROWS_AS(jet_parameters(0), DomainError);
}

TEST_CASE("key inequality k(k+delta-1+k delta) < (delta+1)^2") {
  // n = 2: 3 * 46 = 138 < 144
  CHECK(key_inequality(2));
  // n = 1: 2 * 16 = 32 < 36
  CHECK(key_inequality(1));
  for (long n = 1; n <= 12; ++n) CHECK(key_inequality(n));
}

TEST_CASE("decompose_degree") {
  // n = 2, d = 207691 = threshold: epsilon = 11, r = 18877
  auto d = decompose_degree(2, BigInt(207691));
  REQUIRE(d.has_value());
  CHECK(d->epsilon == 11);
  CHECK(d->r == 18877);
  CHECK(d->r_inequality_holds);

  // below the proof's threshold
  CHECK_FALSE(decompose_degree(2, BigInt(100)).has_value());

  // epsilon is the unique residue in its window and the reconstruction holds
  for (long n = 1; n <= 6; ++n) {
    JetParameters p = jet_parameters(n);
    BigInt threshold = (p.r0 + p.k) * p.delta + 2 * p.delta;
    std::vector<BigInt> probes = {threshold, BigInt(threshold + 1), BigInt(threshold + p.delta + 7),
                                  BigInt(2 * threshold)};
    for (const BigInt& probe : probes) {
      auto dec = decompose_degree(n, probe);
      REQUIRE(dec.has_value());
      CHECK(dec->epsilon >= p.k);
      CHECK(dec->epsilon <= p.k + p.delta - 1);
      CHECK(dec->epsilon + (dec->r + p.k) * p.delta == probe);
      CHECK(dec->r_inequality_holds);
    }
  }
}

TEST_CASE("threshold against the stated degree bound") {
  ThresholdComparison c2 = threshold_vs_stated_bound(2);
  CHECK(c2.threshold == 207691);
  CHECK(c2.stated == 248832);  // 3^5 * 4^5
  CHECK(c2.ok);

  ThresholdComparison c1 = threshold_vs_stated_bound(1);
  CHECK(c1.threshold == 1070);
  CHECK(c1.stated == 1296);  // 2^4 * 3^4
  CHECK(c1.ok);

  for (long n = 1; n <= 12; ++n) CHECK(threshold_vs_stated_bound(n).ok);
}

TEST_CASE("main theorem bound and the dimension shift") {
  CHECK(main_theorem_bound(3) == 248832);
  CHECK(main_theorem_bound(2) == 1296);
  for (long n = 2; n <= 8; ++n)
    CHECK(main_theorem_bound(n) == threshold_vs_stated_bound(n - 1).stated);
  CHECK_THROWS_AS(main_theorem_bound(1), DomainError);
}

TEST_CASE("twist ratios stay below one half") {
  TwistRatios t = twist_ratio_limit(2, {1, 2, 5, 10});
  CHECK(t.limit_below_half);
  CHECK(t.limit == Rational(726, 2905));
  // with beta = beta~ = 0 every ratio equals the limit
  for (const auto& ratio : t.ratios) CHECK(ratio == t.limit);
  // equivalently m~ > 2m for every alpha
  for (const auto& ratio : t.ratios) CHECK(2 * numerator(ratio) < denominator(ratio));

  // nonzero existential constants shift the ratios but not the limit
  TwistRatios shifted = twist_ratio_limit(2, {1, 2, 5, 10}, std::nullopt, BigInt(7), BigInt(-3));
  CHECK(shifted.limit == t.limit);
  CHECK(shifted.ratios.front() != t.limit);

  CHECK_THROWS_AS(twist_ratio_limit(2, {0}), DomainError);
}
