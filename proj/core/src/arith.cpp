#include "gcdens/arith.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <map>

#include "gcdens/error.hpp"

namespace gcdens {

u64 pow_mod(u64 a, u64 e, u64 m) {
  if (m == 1) return 0;
  u64 result = 1;
  a %= m;
  while (e != 0) {
    if (e & 1) result = mul_mod(result, a, m);
    a = mul_mod(a, a, m);
    e >>= 1;
  }
  return result;
}

u64 gcd(u64 a, u64 b) {
  while (b != 0) {
    u64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

u64 lcm(u64 a, u64 b) {
  if (a == 0 || b == 0) return 0;
  return a / gcd(a, b) * b;
}

u64 isqrt(u64 n) {
  u64 r = static_cast<u64>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && static_cast<u128>(r) * r > n) --r;
  while (static_cast<u128>(r + 1) * (r + 1) <= n) ++r;
  return r;
}

u64 inv_mod(u64 a, u64 m) {
  // Extended Euclid on signed 128-bit to keep the Bezout coefficients exact.
  i128 old_r = static_cast<i128>(a % m), r = static_cast<i128>(m);
  i128 old_s = 1, s = 0;
  while (r != 0) {
    i128 q = old_r / r;
    i128 tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1) {
    if (m == 1) return 0;
    throw Error(ErrorCode::NotInvertible, "inverse of " + std::to_string(a) +
                                              " modulo " + std::to_string(m));
  }
  old_s %= static_cast<i128>(m);
  if (old_s < 0) old_s += m;
  return static_cast<u64>(old_s);
}

int legendre(i64 a, u64 p) {
  u64 r = pow_mod(to_residue(a, p), (p - 1) / 2, p);
  if (r == 0) return 0;
  return r == 1 ? 1 : -1;
}

namespace {

// Jacobi symbol (a/n) for odd positive n.
int jacobi(u64 a, u64 n) {
  int t = 1;
  a %= n;
  while (a != 0) {
    while ((a & 1) == 0) {
      a >>= 1;
      u64 r = n & 7;
      if (r == 3 || r == 5) t = -t;
    }
    std::swap(a, n);
    if ((a & 3) == 3 && (n & 3) == 3) t = -t;
    a %= n;
  }
  return n == 1 ? t : 0;
}

}  // namespace

int kronecker(i64 a, i64 n) {
  if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
  int result = 1;
  u64 m;
  if (n < 0) {
    m = static_cast<u64>(-(n + 1)) + 1;
    if (a < 0) result = -result;
  } else {
    m = static_cast<u64>(n);
  }
  unsigned twos = static_cast<unsigned>(std::countr_zero(m));
  if (twos > 0) {
    if ((a & 1) == 0) return 0;
    m >>= twos;
    // (a/2) = +1 for a = +-1 mod 8, -1 for a = +-3 mod 8.
    i64 r = ((a % 8) + 8) % 8;
    if ((twos & 1) && (r == 3 || r == 5)) result = -result;
  }
  if (m == 1) return result;
  return result * jacobi(to_residue(a, m), m);
}

u64 sqrt_mod(u64 a, u64 p) {
  a %= p;
  if (a == 0) return 0;
  if (legendre(static_cast<i64>(a), p) != 1) {
    throw Error(ErrorCode::NonResidue,
                std::to_string(a) + " modulo " + std::to_string(p));
  }
  u64 r;
  if ((p & 3) == 3) {
    r = pow_mod(a, (p + 1) / 4, p);
  } else {
    unsigned s = static_cast<unsigned>(std::countr_zero(p - 1));
    u64 q = (p - 1) >> s;
    u64 z = 2;
    while (legendre(static_cast<i64>(z), p) != -1) ++z;
    u64 c = pow_mod(z, q, p);
    r = pow_mod(a, (q + 1) / 2, p);
    u64 t = pow_mod(a, q, p);
    unsigned m = s;
    while (t != 1) {
      unsigned i = 0;
      u64 t2 = t;
      while (t2 != 1) {
        t2 = mul_mod(t2, t2, p);
        ++i;
      }
      u64 b = c;
      for (unsigned j = 0; j + i + 1 < m; ++j) b = mul_mod(b, b, p);
      r = mul_mod(r, b, p);
      c = mul_mod(b, b, p);
      t = mul_mod(t, c, p);
      m = i;
    }
  }
  return std::min(r, p - r);
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  static constexpr std::array<u64, 12> kSmall = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (u64 q : kSmall) {
    if (n % q == 0) return n == q;
  }
  u64 d = n - 1;
  unsigned s = static_cast<unsigned>(std::countr_zero(d));
  d >>= s;
  // The first twelve primes form a witness set for all n < 3.3 * 10^24.
  for (u64 base : kSmall) {
    u64 x = pow_mod(base, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

namespace {

constexpr u64 kTrialLimit = 1'000'000;

// Brent's cycle detection with batched gcds. Returns a nontrivial factor of an
// odd composite n, or n itself if the polynomial x^2 + c fails.
u64 brent_rho(u64 n, u64 c) {
  constexpr u64 kBatch = 128;
  u64 y = 2, x = 2, ys = 2, q = 1, g = 1;
  u64 r = 1;
  auto f = [&](u64 v) { return add_mod(mul_mod(v, v, n), c, n); };
  do {
    x = y;
    for (u64 i = 0; i < r; ++i) y = f(y);
    u64 k = 0;
    do {
      ys = y;
      u64 steps = std::min(kBatch, r - k);
      for (u64 i = 0; i < steps; ++i) {
        y = f(y);
        q = mul_mod(q, x > y ? x - y : y - x, n);
      }
      g = gcd(q, n);
      k += kBatch;
    } while (k < r && g == 1);
    r <<= 1;
  } while (g == 1);
  if (g == n) {
    // Batch overshot; replay one step at a time.
    do {
      ys = f(ys);
      g = gcd(x > ys ? x - ys : ys - x, n);
    } while (g == 1);
  }
  return g;
}

void split(u64 n, std::map<u64, unsigned>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  u64 r = isqrt(n);
  if (r * r == n) {
    split(r, out);
    split(r, out);
    return;
  }
  for (u64 c = 1;; ++c) {
    u64 d = brent_rho(n, c);
    if (d != n && d != 1) {
      split(d, out);
      split(n / d, out);
      return;
    }
  }
}

}  // namespace

i64 Factorization::squarefree_kernel() const {
  i64 k = sign;
  for (const auto& pp : factors) {
    if (pp.exponent & 1) k *= static_cast<i64>(pp.prime);
  }
  return k;
}

Factorization factorize(i64 n) {
  if (n == 0) throw Error(ErrorCode::ZeroInput, "cannot factor 0");
  Factorization result;
  result.value = n;
  result.sign = n < 0 ? -1 : 1;
  u64 m = n < 0 ? static_cast<u64>(-(n + 1)) + 1 : static_cast<u64>(n);

  std::map<u64, unsigned> found;
  auto strip = [&](u64 q) {
    while (m % q == 0) {
      m /= q;
      ++found[q];
    }
  };
  strip(2);
  strip(3);
  // 6k +- 1 wheel
  for (u64 q = 5; q <= kTrialLimit && q * q <= m; q += 6) {
    strip(q);
    strip(q + 2);
  }
  if (m > 1) split(m, found);
  for (const auto& [p, e] : found) result.factors.push_back({p, e});
  return result;
}

FundamentalDiscriminant fundamental_discriminant(i64 delta) {
  if (delta == 0) throw Error(ErrorCode::ZeroInput, "discriminant of Q(sqrt(0))");
  i64 d = factorize(delta).squarefree_kernel();
  if (d == 1) return {1, true};
  i64 r = ((d % 4) + 4) % 4;
  if (r == 1) return {d, false};
  i64 four_d = 0;
  if (__builtin_mul_overflow(d, i64{4}, &four_d)) {
    throw Error(ErrorCode::Overflow, "fundamental discriminant 4*" + std::to_string(d));
  }
  return {four_d, false};
}

std::vector<u64> sieve_primes(u64 limit) {
  std::vector<u64> primes;
  if (limit < 2) return primes;

  u64 root = isqrt(limit);
  // Base primes up to sqrt(limit) with a plain sieve.
  std::vector<char> small(root + 1, 1);
  std::vector<u64> base;
  for (u64 i = 2; i <= root; ++i) {
    if (!small[i]) continue;
    base.push_back(i);
    for (u64 j = i * i; j <= root; j += i) small[j] = 0;
  }

  if (limit > 1000) {
    primes.reserve(static_cast<std::size_t>(
        1.1 * static_cast<double>(limit) / std::log(static_cast<double>(limit))));
  }

  // Odd numbers only; segment index k stands for lo + 2k.
  constexpr u64 kSegment = 1 << 18;
  std::vector<char> seg(kSegment);
  std::vector<u64> next(base.size(), 0);
  for (std::size_t i = 1; i < base.size(); ++i) next[i] = base[i] * base[i];

  primes.push_back(2);
  for (u64 lo = 3; lo <= limit; lo += 2 * kSegment) {
    u64 hi = std::min<u64>(limit, lo + 2 * kSegment - 1);
    u64 count = (hi - lo) / 2 + 1;
    std::fill(seg.begin(), seg.begin() + static_cast<std::ptrdiff_t>(count), 1);
    for (std::size_t i = 1; i < base.size(); ++i) {
      u64 q = base[i];
      u64 j = next[i];
      if (j > hi) continue;
      for (; j <= hi; j += 2 * q) seg[(j - lo) / 2] = 0;
      next[i] = j;
    }
    for (u64 k = 0; k < count; ++k) {
      if (seg[k]) primes.push_back(lo + 2 * k);
    }
  }
  return primes;
}

}  // namespace gcdens
