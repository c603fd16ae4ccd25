#pragma once

#include "gcdens/curve.hpp"
#include "gcdens/rational.hpp"

namespace gcdens {

// Density of primes p for which l does not divide both p - 1 and #E(F_p),
// when the mod-l image is all of GL_2(F_l): 1 - l / ((l-1)^2 (l+1)).
Rational local_factor(u64 ell);

// Bad-event rate l / ((l-1)^2 (l+1)), the complement of local_factor.
Rational bad_event_rate(u64 ell);

struct ConstantEstimate {
  long double value = 0;
  u64 truncation_prime = 0;
  // Certified bound on |true value - value|.
  long double error_bound = 0;
};

// prod_{l <= limit} local_factor(l), accumulated as a compensated sum of
// logarithms in fixed chunk order (bit-identical for any thread count).
// The tail sum_{l > L} l/((l-1)^2(l+1)) < 2/L gives the certificate 4/L.
// Throws Error(InvalidInput) for limit < 100.
ConstantEstimate universal_constant(u64 limit, unsigned threads = 1);

struct CurveConjecture {
  ConstantEstimate estimate;    // conjectured density for the curve
  ConstantEstimate universal;   // C itself
  i64 discriminant = 0;
  i64 fundamental_discriminant = 1;
  Rational correction{1};
  // Delta is a perfect square: the curve cannot be a Serre curve.
  bool non_serre = false;
};

// Conjectured density of primes with gcd(#E(F_p), p - 1) = 1, assuming the
// curve is a Serre curve: C when D = 0 mod 4, C * correction_factor(D) when
// D = 1 mod 4.
CurveConjecture curve_conjecture(const WeierstrassCurve& curve, u64 limit, unsigned threads = 1);

}  // namespace gcdens
