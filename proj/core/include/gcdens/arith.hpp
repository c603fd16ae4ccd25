#pragma once

// Modular and multiplicative number theory on 64-bit machine words.

#include <cstdint>
#include <vector>

namespace gcdens {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;
using i128 = __int128;

// Residue arithmetic. Inputs must already be reduced (0 <= a, b < m).
inline u64 mul_mod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<u128>(a) * b % m);
}

inline u64 add_mod(u64 a, u64 b, u64 m) {
  u64 s = a + b;
  return (s >= m || s < a) ? s - m : s;
}

inline u64 sub_mod(u64 a, u64 b, u64 m) { return a >= b ? a - b : a + (m - b); }

// Reduces a signed value into [0, m).
inline u64 to_residue(i64 a, u64 m) {
  i64 r = static_cast<i64>(static_cast<i128>(a) % static_cast<i128>(m));
  return r < 0 ? static_cast<u64>(r + static_cast<i64>(m)) : static_cast<u64>(r);
}

u64 pow_mod(u64 a, u64 e, u64 m);

// Throws Error(NotInvertible) when gcd(a, m) > 1.
u64 inv_mod(u64 a, u64 m);

u64 gcd(u64 a, u64 b);
u64 lcm(u64 a, u64 b);
u64 isqrt(u64 n);

// Legendre symbol (a/p) for an odd prime p, via Euler's criterion.
int legendre(i64 a, u64 p);

// Kronecker symbol (a/n), the multiplicative extension of the Jacobi symbol
// to all integers n, including the (a/2) and (a/-1) rules.
int kronecker(i64 a, i64 n);

// Smaller square root of a modulo an odd prime p (Tonelli-Shanks).
// Throws Error(NonResidue) when (a/p) = -1.
u64 sqrt_mod(u64 a, u64 p);

// Deterministic Miller-Rabin, valid for every 64-bit input.
bool is_prime(u64 n);

struct PrimePower {
  u64 prime;
  unsigned exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

struct Factorization {
  i64 value = 0;
  int sign = 1;
  std::vector<PrimePower> factors;  // primes strictly increasing

  // Product of the distinct primes, with the sign of value.
  i64 squarefree_kernel() const;
};

// Complete factorization of a nonzero value with |n| < 2^63: trial division
// up to 10^6, then Brent's variant of Pollard rho for the cofactor.
// Throws Error(ZeroInput) for n = 0.
Factorization factorize(i64 n);

struct FundamentalDiscriminant {
  i64 value = 1;
  // Set when Q(sqrt(delta)) = Q, i.e. delta is a perfect square.
  bool non_quadratic = true;
};

// Discriminant of the field Q(sqrt(delta)).
FundamentalDiscriminant fundamental_discriminant(i64 delta);

// All primes <= limit in increasing order (segmented sieve of Eratosthenes).
std::vector<u64> sieve_primes(u64 limit);

}  // namespace gcdens
