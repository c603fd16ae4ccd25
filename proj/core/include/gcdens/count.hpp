#pragma once

// Frobenius traces a_p and group orders #E(F_p) = p + 1 - a_p.

#include <string_view>

#include "gcdens/curve.hpp"

namespace gcdens {

enum class CountMethod { NaiveEnum, CharSum, BSGS };

std::string_view to_string(CountMethod method) noexcept;

struct TraceResult {
  u64 p = 0;
  i64 ap = 0;
  u64 cardinality = 0;
  CountMethod method = CountMethod::NaiveEnum;
};

// Below this prime, count_points uses the character sum.
inline constexpr u64 kBsgsThreshold = 1000;

// Largest integer strictly below 2 sqrt(p), i.e. the Hasse bound on |a_p|
// for prime p (4p is never a square).
u64 hasse_bound(u64 p);

// Exact count: point enumeration for p = 2, 3, otherwise
// a_p = -sum_x (x^3 + a x + b / p) over a table of quadratic residues.
TraceResult ap_naive(const ReducedCurve& e);

// Mestre-style order finding: BSGS on random points pins #E(F_p) to the
// unique multiple of the accumulated point-order lcm inside the Hasse
// interval, using the quadratic twist when that fails and ap_naive as the
// final fallback. Requires p > kBsgsThreshold and a short model.
TraceResult cardinality_bsgs(const ReducedCurve& e, u64 seed);

// ap_naive below kBsgsThreshold, cardinality_bsgs above it.
TraceResult count_points(const ReducedCurve& e, u64 seed);

// p | #E(F_p). For p >= 7 this is exactly a_p = 1.
bool is_anomalous(const TraceResult& tr);

// Throws std::logic_error when the result violates |a_p| < 2 sqrt(p) or
// cardinality = p + 1 - a_p.
void check_hasse(const TraceResult& tr);

// Order of a point, given any multiple of it (used by BSGS; exposed for tests).
u64 point_order(const CurvePoint& pt, u64 multiple, const ReducedCurve& e);

// Some m in [lo, hi] with m * pt = O, or 0 when none exists.
u64 bsgs_find_multiple(const CurvePoint& pt, u64 lo, u64 hi, const ReducedCurve& e);

}  // namespace gcdens
