#pragma once

// Integer Weierstrass models y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6,
// their reductions modulo primes, and the chord-tangent group law.

#include <string>
#include <string_view>

#include "gcdens/arith.hpp"

namespace gcdens {

struct WeierstrassCurve {
  i64 a1 = 0, a2 = 0, a3 = 0, a4 = 0, a6 = 0;
  i64 b2 = 0, b4 = 0, b6 = 0, b8 = 0;
  i64 delta = 0;

  // "a1,a2,a3,a4,a6"
  std::string to_string() const;

  friend bool operator==(const WeierstrassCurve&, const WeierstrassCurve&) = default;
};

// Computes the b-invariants and discriminant. Throws Error(SingularCurve) when
// the discriminant vanishes, Error(Overflow) when |delta| >= 2^63 or an
// invariant leaves 64 bits.
WeierstrassCurve new_curve(i64 a1, i64 a2, i64 a3, i64 a4, i64 a6);

// Parses the comma-separated 5-tuple "a1,a2,a3,a4,a6" of decimal integers.
// Throws Error(InvalidInput) on malformed text.
WeierstrassCurve parse_curve(std::string_view text);

// A curve over F_p in general Weierstrass form. For p > 3 the reduction is
// always the short form y^2 = x^3 + a4 x + a6, so a1 = a2 = a3 = 0.
struct ReducedCurve {
  u64 p = 0;
  u64 a1 = 0, a2 = 0, a3 = 0, a4 = 0, a6 = 0;

  bool is_short() const { return a1 == 0 && a2 == 0 && a3 == 0; }
  // Discriminant of this model modulo p.
  u64 discriminant() const;

  friend bool operator==(const ReducedCurve&, const ReducedCurve&) = default;
};

// Short model y^2 = x^3 + a x + b over F_p, p > 3.
ReducedCurve short_curve(u64 p, u64 a, u64 b);

// Reduction of an integral model at a prime. Primes above 3 get the short form
// y^2 = x^3 - 27 c4 x - 54 c6; p = 2, 3 keep the general coefficients.
// Throws Error(BadReduction) when p divides the discriminant.
ReducedCurve reduce_mod_p(const WeierstrassCurve& curve, u64 p);

struct CurvePoint {
  u64 x = 0, y = 0;
  bool infinity = true;

  static CurvePoint at_infinity() { return {}; }
  static CurvePoint affine(u64 x, u64 y) { return {x, y, false}; }

  friend bool operator==(const CurvePoint&, const CurvePoint&) = default;
};

bool is_on_curve(const CurvePoint& pt, const ReducedCurve& e);
CurvePoint negate(const CurvePoint& pt, const ReducedCurve& e);
CurvePoint add(const CurvePoint& a, const CurvePoint& b, const ReducedCurve& e);
CurvePoint dbl(const CurvePoint& pt, const ReducedCurve& e);
CurvePoint scalar_mul(u64 k, const CurvePoint& pt, const ReducedCurve& e);

// Rejection-samples x from a generator seeded by `seed` until the right-hand
// side is a square, and returns (x, smaller root). Requires p > 3 (short form).
// Throws Error(Exhausted) after 10p failed trials.
CurvePoint random_point(const ReducedCurve& e, u64 seed);

// SplitMix64 step; the seeding primitive shared by point sampling and surveys.
u64 splitmix64(u64& state);

}  // namespace gcdens
