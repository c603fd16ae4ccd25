#include "gcdens/count.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "gcdens/error.hpp"
#include "oracles.hpp"

using namespace gcdens;

TEST(ApNaive, SmallExamples) {
  auto tr = ap_naive(reduce_mod_p(new_curve(0, 0, 0, 1, 1), 5));
  EXPECT_EQ(tr.ap, -3);
  EXPECT_EQ(tr.cardinality, 9u);
  EXPECT_EQ(tr.method, CountMethod::CharSum);

  // y^2 + y = x^3 - x over F_2: x = 0 and x = 1 both give y in {0, 1}.
  auto two = ap_naive(reduce_mod_p(new_curve(0, 0, 1, -1, 0), 2));
  EXPECT_EQ(two.method, CountMethod::NaiveEnum);
  EXPECT_EQ(two.cardinality, oracle::count_points_brute(0, 0, 1, -1, 0, 2));
  EXPECT_EQ(two.cardinality, 5u);
  EXPECT_GE(two.cardinality, 2u);
  EXPECT_LE(two.cardinality, 6u);
}

TEST(ApNaive, MatchesBruteForceAndHasse) {
  const WeierstrassCurve curves[] = {new_curve(0, 0, 1, -1, 0), new_curve(0, 0, 0, 1, 1),
                                     new_curve(0, 0, 0, -1, 0), new_curve(1, -1, 1, -3, 7)};
  for (const auto& c : curves) {
    for (u64 p : sieve_primes(400)) {
      if (c.delta % static_cast<i64>(p) == 0) continue;
      auto tr = ap_naive(reduce_mod_p(c, p));
      ASSERT_EQ(tr.cardinality, oracle::count_points_brute(c.a1, c.a2, c.a3, c.a4, c.a6, static_cast<i64>(p)))
          << c.to_string() << " p=" << p;
      ASSERT_LT(std::abs(static_cast<double>(tr.ap)), 2 * std::sqrt(static_cast<double>(p)));
    }
  }
}

TEST(ApNaive, CharSumHandlesGeneralModels) {
  // A non-short model over p > 3 takes the discriminant-of-quadratic route.
  ReducedCurve e{13, 1, 2, 3, 4, 5};
  ASSERT_NE(e.discriminant(), 0u);
  EXPECT_EQ(ap_naive(e).cardinality, oracle::count_points_brute(1, 2, 3, 4, 5, 13));
}

TEST(HasseBound, StrictIntegerBound) {
  for (u64 p : sieve_primes(5000)) {
    const u64 b = hasse_bound(p);
    ASSERT_LT(b * b, 4 * p);
    ASSERT_GT((b + 1) * (b + 1), 4 * p);
  }
}

TEST(BsgsFindMultiple, FindsKillingMultiple) {
  const auto e = reduce_mod_p(new_curve(0, 0, 1, -1, 0), 10007);
  const auto n = ap_naive(e).cardinality;
  const u64 b = hasse_bound(10007);
  for (u64 seed = 1; seed < 30; ++seed) {
    auto pt = random_point(e, seed);
    u64 m = bsgs_find_multiple(pt, 10008 - b, 10008 + b, e);
    ASSERT_NE(m, 0u);
    ASSERT_TRUE(scalar_mul(m, pt, e).infinity);
    u64 ord = point_order(pt, m, e);
    ASSERT_EQ(n % ord, 0u);
    ASSERT_TRUE(scalar_mul(ord, pt, e).infinity);
  }
}

TEST(CardinalityBsgs, AgreesWithCharSum) {
  const WeierstrassCurve curves[] = {new_curve(0, 0, 1, -1, 0), new_curve(0, 0, 0, 1, 1),
                                     new_curve(0, 0, 0, -1, 0), new_curve(0, 0, 0, 0, 1),
                                     new_curve(0, 0, 0, 1, 0)};
  for (const auto& c : curves) {
    for (u64 p : sieve_primes(6000)) {
      if (p <= kBsgsThreshold || c.delta % static_cast<i64>(p) == 0) continue;
      const auto e = reduce_mod_p(c, p);
      const auto fast = cardinality_bsgs(e, p * 31 + 7);
      const auto slow = ap_naive(e);
      ASSERT_EQ(fast.cardinality, slow.cardinality) << c.to_string() << " p=" << p;
      ASSERT_EQ(fast.ap, slow.ap);
    }
  }
}

TEST(CardinalityBsgs, LagrangeOnRandomPoints) {
  const auto curve = new_curve(0, 0, 1, -1, 0);
  for (u64 p : {1009u, 65537u, 1000003u, 4294967291u}) {
    const auto e = reduce_mod_p(curve, p);
    const auto tr = cardinality_bsgs(e, 99);
    EXPECT_EQ(tr.method, CountMethod::BSGS);
    check_hasse(tr);
    for (u64 s = 0; s < 20; ++s) EXPECT_TRUE(scalar_mul(tr.cardinality, random_point(e, 1000 + s), e).infinity);
  }
}

TEST(CardinalityBsgs, RejectsSmallPrimes) {
  EXPECT_THROW(cardinality_bsgs(reduce_mod_p(new_curve(0, 0, 1, -1, 0), 997), 1), Error);
}

TEST(CountPoints, DispatchesOnThreshold) {
  const auto curve = new_curve(0, 0, 0, 1, 1);
  EXPECT_EQ(count_points(reduce_mod_p(curve, 997), 1).method, CountMethod::CharSum);
  EXPECT_EQ(count_points(reduce_mod_p(curve, 1009), 1).method, CountMethod::BSGS);
  EXPECT_EQ(count_points(reduce_mod_p(curve, 3), 1).method, CountMethod::NaiveEnum);
}

TEST(IsAnomalous, Examples) {
  EXPECT_TRUE(is_anomalous(TraceResult{7, 1, 7, CountMethod::CharSum}));
  EXPECT_FALSE(is_anomalous(TraceResult{5, -3, 9, CountMethod::CharSum}));
  EXPECT_FALSE(is_anomalous(TraceResult{11, 0, 12, CountMethod::CharSum}));
  EXPECT_TRUE(is_anomalous(TraceResult{5, 1, 5, CountMethod::CharSum}));
  EXPECT_TRUE(is_anomalous(TraceResult{3, -2, 6, CountMethod::NaiveEnum}));
}

TEST(IsAnomalous, EquivalentToTraceOneAboveSix) {
  for (const auto& c : {new_curve(0, 0, 1, -1, 0), new_curve(0, 0, 0, 1, 1), new_curve(0, 1, 1, 0, 0)}) {
    for (u64 p : sieve_primes(5000)) {
      if (p < 7 || c.delta % static_cast<i64>(p) == 0) continue;
      auto tr = ap_naive(reduce_mod_p(c, p));
      ASSERT_EQ(tr.cardinality % p == 0, tr.ap == 1) << p;
      ASSERT_EQ(is_anomalous(tr), tr.ap == 1);
    }
  }
}

TEST(CheckHasse, RejectsOutOfRange) {
  EXPECT_THROW(check_hasse(TraceResult{5, 5, 1, CountMethod::CharSum}), std::logic_error);
  EXPECT_THROW(check_hasse(TraceResult{5, 1, 4, CountMethod::CharSum}), std::logic_error);
  EXPECT_NO_THROW(check_hasse(TraceResult{5, -3, 9, CountMethod::CharSum}));
}
