#include "gcdens/curve.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "gcdens/count.hpp"
#include "gcdens/error.hpp"
#include "oracles.hpp"

using namespace gcdens;

TEST(NewCurve, Discriminants) {
  EXPECT_EQ(new_curve(0, 0, 0, 1, 1).delta, -496);
  EXPECT_EQ(new_curve(0, 0, 1, -1, 0).delta, 37);
  EXPECT_EQ(new_curve(0, 0, 0, -1, 0).delta, 64);
  // Short models: delta = -16 (4A^3 + 27B^2).
  for (i64 a = -5; a <= 5; ++a)
    for (i64 b = -5; b <= 5; ++b) {
      i64 d = -16 * (4 * a * a * a + 27 * b * b);
      if (d == 0) continue;
      ASSERT_EQ(new_curve(0, 0, 0, a, b).delta, d);
    }
}

TEST(NewCurve, SingularRejected) {
  try {
    new_curve(0, 0, 0, 0, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SingularCurve);
  }
  EXPECT_THROW(new_curve(0, 0, 0, -3, 2), Error);  // node at x = 1
}

TEST(NewCurve, OverflowRejected) {
  try {
    new_curve(0, 0, 0, i64{1} << 40, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Overflow);
  }
}

TEST(NewCurve, BInvariantIdentity) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 1000; ++i) {
    auto coef = [&] { return static_cast<i64>(rng() % 2001) - 1000; };
    i64 a1 = coef(), a2 = coef(), a3 = coef(), a4 = coef(), a6 = coef();
    WeierstrassCurve c;
    try {
      c = new_curve(a1, a2, a3, a4, a6);
    } catch (const Error&) {
      continue;
    }
    ASSERT_EQ(4 * c.b8, c.b2 * c.b6 - c.b4 * c.b4);
  }
}

TEST(ParseCurve, FormatAndErrors) {
  auto c = parse_curve("0,0,1,-1,0");
  EXPECT_EQ(c.a3, 1);
  EXPECT_EQ(c.a4, -1);
  EXPECT_EQ(c.to_string(), "0,0,1,-1,0");
  EXPECT_EQ(parse_curve(" 0, 0, 0, 1, 1").delta, -496);
  for (const char* bad : {"", "0,0,0,1", "0,0,0,1,1,1", "0,0,x,1,1", "0,,0,1,1", "1.5,0,0,1,1"}) {
    try {
      parse_curve(bad);
      FAIL() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::InvalidInput) << bad;
    }
  }
}

TEST(ReduceModP, ShortFormAndBadPrimes) {
  auto e = reduce_mod_p(new_curve(0, 0, 1, -1, 0), 5);
  EXPECT_TRUE(e.is_short());
  EXPECT_NE(e.discriminant(), 0u);

  auto c = new_curve(0, 0, 0, 1, 1);
  for (u64 p : {2u, 31u}) {
    try {
      reduce_mod_p(c, p);
      FAIL() << p;
    } catch (const Error& err) {
      EXPECT_EQ(err.code(), ErrorCode::BadReduction);
    }
  }
  auto small = reduce_mod_p(new_curve(0, 0, 1, -1, 0), 2);
  EXPECT_EQ(small.a3, 1u);
  EXPECT_EQ(small.a4, 1u);
}

TEST(ReduceModP, PointCountIndependentOfModel) {
  const WeierstrassCurve curves[] = {new_curve(0, 0, 1, -1, 0), new_curve(1, -1, 1, -3, 7),
                                     new_curve(1, 2, 3, 4, 5), new_curve(0, -1, 1, -10, -20)};
  for (const auto& c : curves) {
    for (u64 p : {5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u, 41u, 43u, 47u, 53u, 97u}) {
      if (c.delta % static_cast<i64>(p) == 0) continue;
      const auto e = reduce_mod_p(c, p);
      const u64 general = oracle::count_points_brute(c.a1, c.a2, c.a3, c.a4, c.a6, static_cast<i64>(p));
      const u64 shortf = oracle::count_points_brute(0, 0, 0, static_cast<i64>(e.a4), static_cast<i64>(e.a6),
                                                    static_cast<i64>(p));
      ASSERT_EQ(general, shortf) << c.to_string() << " p=" << p;
    }
  }
}

namespace {

std::vector<CurvePoint> all_points(const ReducedCurve& e) {
  std::vector<CurvePoint> pts{CurvePoint::at_infinity()};
  for (u64 x = 0; x < e.p; ++x)
    for (u64 y = 0; y < e.p; ++y)
      if (is_on_curve(CurvePoint::affine(x, y), e)) pts.push_back(CurvePoint::affine(x, y));
  return pts;
}

}  // namespace

TEST(GroupLaw, IdentityInverseAndOrderOverF5) {
  const auto e = reduce_mod_p(new_curve(0, 0, 0, 1, 1), 5);
  const auto pts = all_points(e);
  ASSERT_EQ(pts.size(), 9u);
  for (const auto& p : pts) {
    EXPECT_EQ(add(p, CurvePoint::at_infinity(), e), p);
    EXPECT_TRUE(add(p, negate(p, e), e).infinity);
    EXPECT_TRUE(scalar_mul(9, p, e).infinity);
  }
}

TEST(GroupLaw, GeneralModelsInCharacteristicTwoAndThree) {
  // Non-short models where the inverse is (x, -y - a1 x - a3).
  for (auto [c, p] : {std::pair{new_curve(0, 0, 1, -1, 0), u64{2}}, std::pair{new_curve(1, 0, 0, 0, 1), u64{3}},
                      std::pair{new_curve(1, 1, 1, 1, 1), u64{3}}}) {
    if (c.delta % static_cast<i64>(p) == 0) continue;
    const auto e = reduce_mod_p(c, p);
    const auto pts = all_points(e);
    const u64 n = pts.size();
    for (const auto& a : pts) {
      EXPECT_TRUE(is_on_curve(negate(a, e), e));
      EXPECT_TRUE(add(a, negate(a, e), e).infinity);
      EXPECT_TRUE(scalar_mul(n, a, e).infinity);
      for (const auto& b : pts) {
        auto s = add(a, b, e);
        EXPECT_TRUE(is_on_curve(s, e));
        EXPECT_EQ(s, add(b, a, e));
      }
    }
  }
}

TEST(GroupLaw, AxiomsOnRandomPrimes) {
  std::mt19937_64 rng(5);
  auto primes = sieve_primes(10000);
  const auto curve = new_curve(0, 0, 1, -1, 0);
  int tested = 0;
  while (tested < 50) {
    u64 p = primes[5 + rng() % (primes.size() - 5)];
    if (curve.delta % static_cast<i64>(p) == 0) continue;
    ++tested;
    const auto e = reduce_mod_p(curve, p);
    for (int t = 0; t < 10; ++t) {
      auto a = random_point(e, rng());
      auto b = random_point(e, rng());
      auto c = random_point(e, rng());
      ASSERT_EQ(add(add(a, b, e), c, e), add(a, add(b, c, e), e)) << "p=" << p;
      ASSERT_EQ(add(a, b, e), add(b, a, e));
      ASSERT_EQ(add(a, a, e), dbl(a, e));
      ASSERT_EQ(scalar_mul(3, a, e), add(a, dbl(a, e), e));
      ASSERT_TRUE(add(a, negate(a, e), e).infinity);
    }
  }
}

TEST(RandomPoint, DeterministicAndOnCurve) {
  const auto e = reduce_mod_p(new_curve(0, 0, 0, 1, 1), 5);
  std::set<std::pair<u64, u64>> affine;
  for (const auto& p : all_points(e))
    if (!p.infinity) affine.insert({p.x, p.y});
  ASSERT_EQ(affine.size(), 8u);
  for (u64 seed = 0; seed < 100; ++seed) {
    auto p = random_point(e, seed);
    EXPECT_FALSE(p.infinity);
    EXPECT_TRUE(is_on_curve(p, e));
    EXPECT_TRUE(affine.count({p.x, p.y}));
    EXPECT_EQ(p, random_point(e, seed));
  }
}

TEST(RandomPoint, RejectsSmallCharacteristic) {
  const auto e = reduce_mod_p(new_curve(0, 0, 1, -1, 0), 2);
  EXPECT_THROW(random_point(e, 1), Error);
}
