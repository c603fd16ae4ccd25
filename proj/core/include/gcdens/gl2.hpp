#pragma once

// Exhaustive combinatorics of GL_2(F_l) for small primes l.

#include <cstdint>
#include <vector>

#include "gcdens/arith.hpp"

namespace gcdens {

// Largest modulus the brute-force paths accept (|GL_2(F_13)| = 26208).
inline constexpr u64 kMaxBruteForceEll = 13;

// 2x2 matrix [[a, b], [c, d]] over F_ell.
struct Mat2 {
  u64 ell = 2;
  u64 a = 1, b = 0, c = 0, d = 1;

  static Mat2 identity(u64 ell) { return {ell, 1, 0, 0, 1}; }

  u64 det() const;
  u64 trace() const { return (a + d) % ell; }
  bool invertible() const { return det() != 0; }
  Mat2 inverse() const;

  friend Mat2 operator*(const Mat2& x, const Mat2& y);
  friend bool operator==(const Mat2&, const Mat2&) = default;
};

// Closed form (l^2 - 1)(l^2 - l).
u64 gl2_order(u64 ell);

// All invertible matrices, in lexicographic (a, b, c, d) order.
// Throws Error(InvalidInput) unless ell is a prime <= kMaxBruteForceEll.
std::vector<Mat2> enumerate_gl2(u64 ell);

// Sign of the permutation M induces on the nonzero vectors of F_2^2.
int sgn2(const Mat2& m);

// det M = 1 and trace M = 2: M has 1 as a double eigenvalue, i.e. M is the
// identity or conjugate to [[1, 1], [0, 1]].
bool is_special(const Mat2& m);

struct CountCheck {
  u64 brute_force = 0;
  u64 closed_form = 0;
};

// Each of these counts by exhaustion and compares with the closed form,
// throwing Error(MismatchedCount) if they disagree.
CountCheck count_group(u64 ell);           // (l^2 - 1)(l^2 - l)
CountCheck count_special(u64 ell);         // l^2
CountCheck centralizer_order_T(u64 ell);   // l^2 - l
CountCheck class_size_T(u64 ell);          // l^2 - 1, by explicit conjugation

// Sum of (det M / l) over non-special M, for odd l. Equals -l^2.
i64 chi_det_sum(u64 ell);

// Sum of sgn2(M) over non-special M in GL_2(F_2). Equals 2.
i64 sgn_sum_2();

}  // namespace gcdens
