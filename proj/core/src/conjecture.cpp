#include "gcdens/conjecture.hpp"

#include <cmath>
#include <thread>
#include <vector>

#include "gcdens/entangle.hpp"
#include "gcdens/error.hpp"

namespace gcdens {

Rational bad_event_rate(u64 ell) {
  const i128 l = static_cast<i128>(ell);
  return Rational(l, (l - 1) * (l - 1) * (l + 1));
}

Rational local_factor(u64 ell) { return Rational{1} - bad_event_rate(ell); }

namespace {

// Neumaier's variant of Kahan summation.
struct CompensatedSum {
  long double sum = 0;
  long double carry = 0;

  void add(long double v) {
    long double t = sum + v;
    if (std::fabs(sum) >= std::fabs(v)) {
      carry += (sum - t) + v;
    } else {
      carry += (v - t) + sum;
    }
    sum = t;
  }
  long double value() const { return sum + carry; }
};

constexpr std::size_t kChunk = 4096;

}  // namespace

ConstantEstimate universal_constant(u64 limit, unsigned threads) {
  if (limit < 100) throw Error(ErrorCode::InvalidInput, "truncation bound must be at least 100");
  const auto primes = sieve_primes(limit);
  const std::size_t chunks = (primes.size() + kChunk - 1) / kChunk;
  std::vector<CompensatedSum> partial(chunks);

  // Chunk boundaries depend only on the prime list, so the ordered merge
  // below is identical for any thread count.
  auto work = [&](std::size_t first, std::size_t last) {
    for (std::size_t c = first; c < last; ++c) {
      std::size_t end = std::min(primes.size(), (c + 1) * kChunk);
      for (std::size_t i = c * kChunk; i < end; ++i) {
        const long double l = static_cast<long double>(primes[i]);
        partial[c].add(std::log1p(-l / ((l - 1) * (l - 1) * (l + 1))));
      }
    }
  };
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(chunks, 1))));
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back(work, chunks * t / threads, chunks * (t + 1) / threads);
    }
  }
  CompensatedSum total;
  for (const auto& p : partial) {
    total.add(p.sum);
    total.add(p.carry);
  }
  return ConstantEstimate{std::exp(total.value()), limit, 4.0L / static_cast<long double>(limit)};
}

CurveConjecture curve_conjecture(const WeierstrassCurve& curve, u64 limit, unsigned threads) {
  CurveConjecture out;
  out.universal = universal_constant(limit, threads);
  out.discriminant = curve.delta;
  const auto fd = fundamental_discriminant(curve.delta);
  out.fundamental_discriminant = fd.value;
  out.non_serre = fd.non_quadratic;
  if (!fd.non_quadratic && ((fd.value % 4) + 4) % 4 == 1) {
    out.correction = correction_factor(fd.value);
  }
  const long double corr = out.correction.to_long_double();
  out.estimate = ConstantEstimate{out.universal.value * corr, limit, out.universal.error_bound * corr};
  return out;
}

}  // namespace gcdens
