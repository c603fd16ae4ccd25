#include "gcdens/curve.hpp"

#include <charconv>
#include <limits>
#include <vector>

#include "gcdens/error.hpp"

namespace gcdens {

namespace {

i64 narrow(i128 v, const char* what) {
  if (v > std::numeric_limits<i64>::max() || v < -std::numeric_limits<i64>::max()) {
    throw Error(ErrorCode::Overflow, std::string(what) + " does not fit in 63 bits");
  }
  return static_cast<i64>(v);
}

// Overflow-checked 128-bit product for the discriminant polynomial; the
// intermediate terms can exceed 2^127 only for absurd coefficients.
i128 mul(i128 a, i128 b) {
  i128 r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw Error(ErrorCode::Overflow, "discriminant intermediate exceeds 128 bits");
  }
  return r;
}

i128 sum(std::initializer_list<i128> terms) {
  i128 acc = 0;
  for (i128 t : terms) {
    if (__builtin_add_overflow(acc, t, &acc)) {
      throw Error(ErrorCode::Overflow, "discriminant intermediate exceeds 128 bits");
    }
  }
  return acc;
}

}  // namespace

WeierstrassCurve new_curve(i64 a1, i64 a2, i64 a3, i64 a4, i64 a6) {
  WeierstrassCurve c{a1, a2, a3, a4, a6};
  const i128 A1 = a1, A2 = a2, A3 = a3, A4 = a4, A6 = a6;
  const i128 b2 = sum({mul(A1, A1), mul(4, A2)});
  const i128 b4 = sum({mul(2, A4), mul(A1, A3)});
  const i128 b6 = sum({mul(A3, A3), mul(4, A6)});
  const i128 b8 = sum({mul(mul(A1, A1), A6), mul(mul(4, A2), A6), -mul(mul(A1, A3), A4),
                       mul(A2, mul(A3, A3)), -mul(A4, A4)});
  const i128 delta = sum({-mul(mul(b2, b2), b8), -mul(8, mul(b4, mul(b4, b4))),
                          -mul(27, mul(b6, b6)), mul(9, mul(b2, mul(b4, b6)))});
  c.b2 = narrow(b2, "b2");
  c.b4 = narrow(b4, "b4");
  c.b6 = narrow(b6, "b6");
  c.b8 = narrow(b8, "b8");
  if (delta == 0) throw Error(ErrorCode::SingularCurve, "discriminant is zero for " + c.to_string());
  c.delta = narrow(delta, "discriminant");
  return c;
}

std::string WeierstrassCurve::to_string() const {
  return std::to_string(a1) + "," + std::to_string(a2) + "," + std::to_string(a3) + "," +
         std::to_string(a4) + "," + std::to_string(a6);
}

WeierstrassCurve parse_curve(std::string_view text) {
  std::vector<i64> coeffs;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = text.find(',', pos);
    std::string_view field = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
    while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
    while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
    if (!field.empty() && field.front() == '+') field.remove_prefix(1);
    i64 v = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
    if (field.empty() || ec != std::errc() || ptr != field.data() + field.size()) {
      throw Error(ErrorCode::InvalidInput,
                  "curve must be 'a1,a2,a3,a4,a6' with decimal integers, got '" +
                      std::string(text) + "'");
    }
    coeffs.push_back(v);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  if (coeffs.size() != 5) {
    throw Error(ErrorCode::InvalidInput,
                "curve needs exactly 5 coefficients, got " + std::to_string(coeffs.size()));
  }
  return new_curve(coeffs[0], coeffs[1], coeffs[2], coeffs[3], coeffs[4]);
}

u64 ReducedCurve::discriminant() const {
  const u64 m = p;
  auto mm = [m](u64 a, u64 b) { return mul_mod(a, b, m); };
  auto ad = [m](u64 a, u64 b) { return add_mod(a, b, m); };
  auto sb = [m](u64 a, u64 b) { return sub_mod(a, b, m); };
  const u64 four = 4 % m, two = 2 % m;
  u64 b2 = ad(mm(a1, a1), mm(four, a2));
  u64 b4 = ad(mm(two, a4), mm(a1, a3));
  u64 b6 = ad(mm(a3, a3), mm(four, a6));
  u64 b8 = sb(ad(ad(mm(mm(a1, a1), a6), mm(mm(four, a2), a6)), mm(a2, mm(a3, a3))),
              ad(mm(mm(a1, a3), a4), mm(a4, a4)));
  u64 d = 0;
  d = sb(d, mm(mm(b2, b2), b8));
  d = sb(d, mm(8 % m, mm(b4, mm(b4, b4))));
  d = sb(d, mm(27 % m, mm(b6, b6)));
  d = ad(d, mm(9 % m, mm(b2, mm(b4, b6))));
  return d;
}

ReducedCurve short_curve(u64 p, u64 a, u64 b) { return ReducedCurve{p, 0, 0, 0, a % p, b % p}; }

ReducedCurve reduce_mod_p(const WeierstrassCurve& curve, u64 p) {
  if (p < 2 || !is_prime(p)) throw Error(ErrorCode::InvalidInput, std::to_string(p) + " is not prime");
  if (to_residue(curve.delta, p) == 0) {
    throw Error(ErrorCode::BadReduction,
                std::to_string(p) + " divides the discriminant " + std::to_string(curve.delta));
  }
  if (p <= 3) {
    return ReducedCurve{p, to_residue(curve.a1, p), to_residue(curve.a2, p), to_residue(curve.a3, p),
                        to_residue(curve.a4, p), to_residue(curve.a6, p)};
  }
  // c4 = b2^2 - 24 b4, c6 = -b2^3 + 36 b2 b4 - 216 b6; the model
  // y^2 = x^3 - 27 c4 x - 54 c6 is isomorphic to the original for p > 3.
  const u64 b2 = to_residue(curve.b2, p), b4 = to_residue(curve.b4, p), b6 = to_residue(curve.b6, p);
  const u64 c4 = sub_mod(mul_mod(b2, b2, p), mul_mod(24 % p, b4, p), p);
  u64 c6 = sub_mod(0, mul_mod(b2, mul_mod(b2, b2, p), p), p);
  c6 = add_mod(c6, mul_mod(36 % p, mul_mod(b2, b4, p), p), p);
  c6 = sub_mod(c6, mul_mod(216 % p, b6, p), p);
  const u64 a = sub_mod(0, mul_mod(27 % p, c4, p), p);
  const u64 b = sub_mod(0, mul_mod(54 % p, c6, p), p);
  ReducedCurve e = short_curve(p, a, b);
  if (e.discriminant() == 0) {
    throw Error(ErrorCode::BadReduction, "reduced model is singular modulo " + std::to_string(p));
  }
  return e;
}

bool is_on_curve(const CurvePoint& pt, const ReducedCurve& e) {
  if (pt.infinity) return true;
  const u64 p = e.p;
  if (pt.x >= p || pt.y >= p) return false;
  const u64 x = pt.x, y = pt.y;
  u64 lhs = add_mod(mul_mod(y, y, p), add_mod(mul_mod(e.a1, mul_mod(x, y, p), p), mul_mod(e.a3, y, p), p), p);
  u64 x2 = mul_mod(x, x, p);
  u64 rhs = add_mod(add_mod(mul_mod(x2, x, p), mul_mod(e.a2, x2, p), p),
                    add_mod(mul_mod(e.a4, x, p), e.a6, p), p);
  return lhs == rhs;
}

CurvePoint negate(const CurvePoint& pt, const ReducedCurve& e) {
  if (pt.infinity) return pt;
  const u64 p = e.p;
  u64 y = sub_mod(sub_mod(0, pt.y, p), add_mod(mul_mod(e.a1, pt.x, p), e.a3, p), p);
  return CurvePoint::affine(pt.x, y);
}

namespace {

// Completes the chord-tangent step given the slope.
CurvePoint finish(u64 lambda, const CurvePoint& a, u64 x2, const ReducedCurve& e) {
  const u64 p = e.p;
  u64 x3 = add_mod(mul_mod(lambda, lambda, p), mul_mod(e.a1, lambda, p), p);
  x3 = sub_mod(x3, add_mod(e.a2, add_mod(a.x, x2, p), p), p);
  u64 nu = sub_mod(a.y, mul_mod(lambda, a.x, p), p);
  u64 y3 = sub_mod(0, mul_mod(add_mod(lambda, e.a1, p), x3, p), p);
  y3 = sub_mod(sub_mod(y3, nu, p), e.a3, p);
  return CurvePoint::affine(x3, y3);
}

}  // namespace

CurvePoint dbl(const CurvePoint& pt, const ReducedCurve& e) {
  if (pt.infinity) return pt;
  const u64 p = e.p;
  const u64 x = pt.x, y = pt.y;
  u64 den = add_mod(add_mod(add_mod(y, y, p), mul_mod(e.a1, x, p), p), e.a3, p);
  if (den == 0) return CurvePoint::at_infinity();
  u64 x2 = mul_mod(x, x, p);
  u64 num = add_mod(mul_mod(3 % p, x2, p), mul_mod(add_mod(e.a2, e.a2, p), x, p), p);
  num = sub_mod(add_mod(num, e.a4, p), mul_mod(e.a1, y, p), p);
  return finish(mul_mod(num, inv_mod(den, p), p), pt, x, e);
}

CurvePoint add(const CurvePoint& a, const CurvePoint& b, const ReducedCurve& e) {
  if (a.infinity) return b;
  if (b.infinity) return a;
  const u64 p = e.p;
  if (a.x == b.x) {
    if (a.y == b.y) return dbl(a, e);
    return CurvePoint::at_infinity();  // b = -a
  }
  u64 lambda = mul_mod(sub_mod(b.y, a.y, p), inv_mod(sub_mod(b.x, a.x, p), p), p);
  return finish(lambda, a, b.x, e);
}

CurvePoint scalar_mul(u64 k, const CurvePoint& pt, const ReducedCurve& e) {
  CurvePoint acc = CurvePoint::at_infinity();
  CurvePoint base = pt;
  while (k != 0) {
    if (k & 1) acc = add(acc, base, e);
    k >>= 1;
    if (k != 0) base = dbl(base, e);
  }
  return acc;
}

u64 splitmix64(u64& state) {
  u64 z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

CurvePoint random_point(const ReducedCurve& e, u64 seed) {
  if (e.p <= 3 || !e.is_short()) {
    throw Error(ErrorCode::InvalidInput, "random_point needs a short model over p > 3");
  }
  const u64 p = e.p;
  u64 state = seed;
  const u64 cap = 10 * p;
  for (u64 trial = 0; trial < cap; ++trial) {
    u64 x = splitmix64(state) % p;
    u64 rhs = add_mod(mul_mod(mul_mod(x, x, p), x, p), add_mod(mul_mod(e.a4, x, p), e.a6, p), p);
    if (legendre(static_cast<i64>(rhs), p) == -1) continue;
    return CurvePoint::affine(x, sqrt_mod(rhs, p));
  }
  throw Error(ErrorCode::Exhausted, "no point found after " + std::to_string(cap) + " trials");
}

}  // namespace gcdens
