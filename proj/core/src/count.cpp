#include "gcdens/count.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "gcdens/error.hpp"

namespace gcdens {

std::string_view to_string(CountMethod method) noexcept {
  switch (method) {
    case CountMethod::NaiveEnum: return "NaiveEnum";
    case CountMethod::CharSum: return "CharSum";
    case CountMethod::BSGS: return "BSGS";
  }
  return "Unknown";
}

u64 hasse_bound(u64 p) { return isqrt(4 * p); }

void check_hasse(const TraceResult& tr) {
  const u64 bound = hasse_bound(tr.p);
  const u64 mag = tr.ap < 0 ? static_cast<u64>(-tr.ap) : static_cast<u64>(tr.ap);
  if (mag > bound || static_cast<i64>(tr.cardinality) != static_cast<i64>(tr.p) + 1 - tr.ap) {
    throw std::logic_error("Hasse bound violated at p=" + std::to_string(tr.p) +
                           " ap=" + std::to_string(tr.ap));
  }
}

namespace {

TraceResult make_result(u64 p, u64 cardinality, CountMethod method) {
  TraceResult tr{p, static_cast<i64>(p) + 1 - static_cast<i64>(cardinality), cardinality, method};
  check_hasse(tr);
  return tr;
}

TraceResult enumerate_all(const ReducedCurve& e) {
  u64 count = 1;  // point at infinity
  for (u64 x = 0; x < e.p; ++x) {
    for (u64 y = 0; y < e.p; ++y) {
      if (is_on_curve(CurvePoint::affine(x, y), e)) ++count;
    }
  }
  return make_result(e.p, count, CountMethod::NaiveEnum);
}

}  // namespace

TraceResult ap_naive(const ReducedCurve& e) {
  const u64 p = e.p;
  if (p <= 3) return enumerate_all(e);

  // chi[v]: quadratic character of v, from one pass over the squares.
  std::vector<signed char> chi(p, -1);
  chi[0] = 0;
  for (u64 y = 1; y <= p / 2; ++y) chi[mul_mod(y, y, p)] = 1;

  // Over odd p, the number of y for a given x is 1 + chi(disc(x)) with
  // disc = (a1 x + a3)^2 + 4 f(x); for short models disc = 4 f(x).
  const u64 four = 4 % p;
  i64 sum = 0;
  for (u64 x = 0; x < p; ++x) {
    u64 x2 = mul_mod(x, x, p);
    u64 f = add_mod(add_mod(mul_mod(x2, x, p), mul_mod(e.a2, x2, p), p),
                    add_mod(mul_mod(e.a4, x, p), e.a6, p), p);
    u64 h = add_mod(mul_mod(e.a1, x, p), e.a3, p);
    u64 disc = add_mod(mul_mod(h, h, p), mul_mod(four, f, p), p);
    sum += chi[disc];
  }
  TraceResult tr{p, -sum, static_cast<u64>(static_cast<i64>(p) + 1 + sum), CountMethod::CharSum};
  check_hasse(tr);
  return tr;
}

u64 point_order(const CurvePoint& pt, u64 multiple, const ReducedCurve& e) {
  if (pt.infinity) return 1;
  u64 order = multiple;
  for (const auto& pp : factorize(static_cast<i64>(multiple)).factors) {
    for (unsigned i = 0; i < pp.exponent; ++i) {
      if (!scalar_mul(order / pp.prime, pt, e).infinity) break;
      order /= pp.prime;
    }
  }
  return order;
}

namespace {

u64 first_multiple_in(u64 r, u64 lo, u64 hi) {
  u64 m = (lo + r - 1) / r * r;
  return m <= hi ? m : 0;
}

u64 count_multiples(u64 l, u64 lo, u64 hi) { return hi / l - (lo - 1) / l; }

struct BabyStep {
  u64 x, y, j;
};

}  // namespace

u64 bsgs_find_multiple(const CurvePoint& pt, u64 lo, u64 hi, const ReducedCurve& e) {
  if (pt.infinity) return lo;
  const u64 width = hi - lo;
  const u64 m = isqrt(width / 2) + 1;

  // Baby steps jP, j = 1..m, keyed by x; jP and -jP share x so each entry
  // covers two offsets.
  std::vector<BabyStep> baby;
  baby.reserve(m);
  CurvePoint cur = pt;
  for (u64 j = 1; j <= m; ++j) {
    if (cur.infinity) return first_multiple_in(j, lo, hi);
    baby.push_back({cur.x, cur.y, j});
    cur = add(cur, pt, e);
  }
  std::sort(baby.begin(), baby.end(),
            [](const BabyStep& a, const BabyStep& b) { return a.x < b.x || (a.x == b.x && a.j < b.j); });
  for (std::size_t i = 1; i < baby.size(); ++i) {
    if (baby[i].x == baby[i - 1].x) {
      // jP = +-kP, so P has order dividing j - k or j + k.
      const auto& a = baby[i - 1];
      const auto& b = baby[i];
      u64 r = a.y == b.y ? b.j - a.j : a.j + b.j;
      return first_multiple_in(point_order(pt, r, e), lo, hi);
    }
  }

  const u64 stride = 2 * m + 1;
  const CurvePoint step = scalar_mul(stride, pt, e);
  u64 center = lo + m;
  CurvePoint giant = scalar_mul(center, pt, e);
  while (center - m <= hi) {
    if (giant.infinity) {
      if (center >= lo && center <= hi) return center;
    } else {
      auto it = std::lower_bound(baby.begin(), baby.end(), giant.x,
                                 [](const BabyStep& s, u64 x) { return s.x < x; });
      if (it != baby.end() && it->x == giant.x) {
        u64 cand = giant.y == it->y ? center - it->j : center + it->j;
        if (cand >= lo && cand <= hi) return cand;
      }
    }
    giant = add(giant, step, e);
    center += stride;
  }
  return 0;
}

namespace {

constexpr int kPointsPerCurve = 8;

// Smallest quadratic non-residue mod p.
u64 non_residue(u64 p) {
  u64 d = 2;
  while (legendre(static_cast<i64>(d), p) != -1) ++d;
  return d;
}

// Extends the lcm of point orders with one more random point. Returns false if
// BSGS found no multiple in the interval, which means the model is inconsistent.
bool absorb_point(const ReducedCurve& e, u64& state, u64 lo, u64 hi, u64& l) {
  CurvePoint pt = random_point(e, splitmix64(state));
  u64 mult = bsgs_find_multiple(pt, lo, hi, e);
  if (mult == 0) return false;
  l = lcm(l, point_order(pt, mult, e));
  return true;
}

}  // namespace

TraceResult cardinality_bsgs(const ReducedCurve& e, u64 seed) {
  const u64 p = e.p;
  if (p <= kBsgsThreshold || !e.is_short()) {
    throw Error(ErrorCode::InvalidInput, "BSGS counting needs p > 1000 and a short model");
  }
  const u64 bound = hasse_bound(p);
  const u64 lo = p + 1 - bound, hi = p + 1 + bound;
  u64 state = seed;

  u64 l = 1;
  for (int i = 0; i < kPointsPerCurve; ++i) {
    if (!absorb_point(e, state, lo, hi, l)) return ap_naive(e);
    if (count_multiples(l, lo, hi) == 1) return make_result(p, first_multiple_in(l, lo, hi), CountMethod::BSGS);
  }

  // Twist y^2 = x^3 + a d^2 x + b d^3 has order 2p + 2 - N.
  const u64 d = non_residue(p);
  const u64 d2 = mul_mod(d, d, p);
  const ReducedCurve twist = short_curve(p, mul_mod(e.a4, d2, p), mul_mod(e.a6, mul_mod(d2, d, p), p));
  u64 lt = 1;
  for (int i = 0; i < kPointsPerCurve; ++i) {
    if (!absorb_point(twist, state, lo, hi, lt)) break;
    u64 found = 0, hits = 0;
    for (u64 n = first_multiple_in(l, lo, hi); n != 0 && n <= hi && hits < 2; n += l) {
      if ((2 * p + 2 - n) % lt == 0) {
        found = n;
        ++hits;
      }
    }
    if (hits == 1) return make_result(p, found, CountMethod::BSGS);
  }
  return ap_naive(e);
}

TraceResult count_points(const ReducedCurve& e, u64 seed) {
  if (e.p <= kBsgsThreshold || !e.is_short()) return ap_naive(e);
  return cardinality_bsgs(e, seed);
}

bool is_anomalous(const TraceResult& tr) {
  if (tr.p >= 7) return tr.ap == 1;
  return tr.cardinality % tr.p == 0;
}

}  // namespace gcdens
