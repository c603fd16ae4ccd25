#pragma once

// Slow reference implementations used only by tests. None of these share code
// paths with the library routines they check.

#include <cstdint>
#include <map>
#include <vector>

namespace oracle {

using u64 = std::uint64_t;
using i64 = std::int64_t;

inline i64 mod(i64 a, i64 m) { return ((a % m) + m) % m; }

// Quadratic character by scanning all squares.
inline int legendre_scan(i64 a, i64 p) {
  i64 r = mod(a, p);
  if (r == 0) return 0;
  for (i64 y = 1; y < p; ++y) {
    if (y * y % p == r) return 1;
  }
  return -1;
}

inline std::map<u64, unsigned> trial_factor(u64 n) {
  std::map<u64, unsigned> f;
  for (u64 q = 2; q * q <= n; ++q) {
    while (n % q == 0) {
      ++f[q];
      n /= q;
    }
  }
  if (n > 1) ++f[n];
  return f;
}

inline std::vector<u64> plain_sieve(u64 limit) {
  std::vector<bool> composite(limit + 1, false);
  std::vector<u64> out;
  for (u64 i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (u64 j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return out;
}

// #E(F_p) for the general model by testing every (x, y).
inline u64 count_points_brute(i64 a1, i64 a2, i64 a3, i64 a4, i64 a6, i64 p) {
  u64 count = 1;
  for (i64 x = 0; x < p; ++x) {
    for (i64 y = 0; y < p; ++y) {
      i64 lhs = mod(y * y + mod(a1, p) * x % p * y + mod(a3, p) * y, p);
      i64 rhs = mod(x * x % p * x + mod(a2, p) * x % p * x + mod(a4, p) * x + mod(a6, p), p);
      if (lhs == rhs) ++count;
    }
  }
  return count;
}

}  // namespace oracle
