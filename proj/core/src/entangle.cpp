#include "gcdens/entangle.hpp"

#include <algorithm>
#include <thread>

#include "gcdens/conjecture.hpp"
#include "gcdens/error.hpp"

namespace gcdens {

namespace {

bool is_one_mod_four(i64 d) { return ((d % 4) + 4) % 4 == 1; }

bool contains(const std::vector<u64>& sorted, u64 v) {
  return std::binary_search(sorted.begin(), sorted.end(), v);
}

}  // namespace

std::vector<u64> disc_primes(i64 disc) {
  std::vector<u64> out;
  for (const auto& pp : factorize(disc).factors) out.push_back(pp.prime);
  return out;
}

EntangleSpec EntangleSpec::make(std::vector<u64> primes, i64 disc) {
  if (primes.empty()) throw Error(ErrorCode::InvalidInput, "prime set S is empty");
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  for (u64 l : primes) {
    if (!is_prime(l)) throw Error(ErrorCode::InvalidInput, std::to_string(l) + " in S is not prime");
  }
  if (disc == 0 || disc == 1) {
    throw Error(ErrorCode::InvalidInput, "D must be the discriminant of a quadratic field");
  }
  auto fd = fundamental_discriminant(disc);
  if (fd.non_quadratic || fd.value != disc) {
    throw Error(ErrorCode::InvalidInput,
                std::to_string(disc) + " is not a fundamental discriminant (field discriminant is " +
                    std::to_string(fd.value) + ")");
  }
  return EntangleSpec{std::move(primes), disc};
}

bool EntangleSpec::needs_correction() const {
  if (!is_one_mod_four(disc) || disc == 1) return false;
  if (!contains(primes, 2)) return false;
  for (u64 l : disc_primes(disc)) {
    if (!contains(primes, l)) return false;
  }
  return true;
}

Rational delta_S(std::span<const u64> primes) {
  Rational acc{1};
  for (u64 l : primes) acc *= local_factor(l);
  return acc;
}

Rational correction_factor(i64 disc) {
  if (disc == 1 || !is_one_mod_four(disc)) {
    throw Error(ErrorCode::WrongCase,
                "correction factor applies only to D = 1 mod 4, D != 1; got " + std::to_string(disc));
  }
  Rational prod{1};
  for (u64 l : disc_primes(disc)) {
    const i128 L = static_cast<i128>(l);
    prod *= Rational(-L, L * L * L - L * L - 2 * L + 1);
  }
  return Rational{1} + prod;
}

Rational density_S(const EntangleSpec& spec) {
  Rational base = delta_S(spec.primes);
  if (spec.needs_correction()) return base * correction_factor(spec.disc);
  return base;
}

bool serre_member(const MatrixTuple& tuple, i64 disc) {
  if (disc == 1 || !is_one_mod_four(disc)) {
    throw Error(ErrorCode::WrongCase, "restricted product is defined here for D = 1 mod 4");
  }
  auto component = [&](u64 l) -> const Mat2& {
    auto it = tuple.find(l);
    if (it == tuple.end()) {
      throw Error(ErrorCode::MissingComponent, "no matrix for l=" + std::to_string(l));
    }
    if (it->second.ell != l) {
      throw Error(ErrorCode::InvalidInput, "matrix stored under l=" + std::to_string(l) +
                                               " has modulus " + std::to_string(it->second.ell));
    }
    return it->second;
  };
  int chi = 1;
  for (u64 l : disc_primes(disc)) chi *= legendre(static_cast<i64>(component(l).det()), l);
  return chi == sgn2(component(2));
}

namespace {

// Per-matrix data the enumerations need: the sign the matrix contributes to
// the membership test, and whether it counts as favourable at its prime.
struct Cell {
  int sign;
  bool good;
};

struct Level {
  u64 ell;
  std::vector<Cell> cells;
};

std::vector<Level> build_levels(const EntangleSpec& spec, const std::vector<u64>& universe,
                                bool restricted) {
  const auto dp = restricted ? disc_primes(spec.disc) : std::vector<u64>{};
  std::vector<Level> levels;
  for (u64 l : universe) {
    Level lv{l, {}};
    const bool in_s = contains(spec.primes, l);
    for (const Mat2& m : enumerate_gl2(l)) {
      int sign = 1;
      if (restricted) {
        if (l == 2) {
          sign = sgn2(m);
        } else if (std::find(dp.begin(), dp.end(), l) != dp.end()) {
          sign = legendre(static_cast<i64>(m.det()), l);
        }
      }
      lv.cells.push_back({sign, !(in_s && is_special(m))});
    }
    levels.push_back(std::move(lv));
  }
  return levels;
}

struct Tally {
  u64 image = 0;
  u64 favourable = 0;
};

void walk(const std::vector<Level>& levels, std::size_t depth, int sign, bool good, Tally& t) {
  if (depth == levels.size()) {
    if (sign == 1) {
      ++t.image;
      if (good) ++t.favourable;
    }
    return;
  }
  for (const Cell& c : levels[depth].cells) walk(levels, depth + 1, sign * c.sign, good && c.good, t);
}

Tally cartesian(const std::vector<Level>& levels, unsigned threads) {
  const auto& outer = levels.front().cells;
  const std::size_t n = outer.size();
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(n)));
  std::vector<Tally> partial(threads);
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        std::size_t begin = n * t / threads, end = n * (t + 1) / threads;
        for (std::size_t i = begin; i < end; ++i) {
          walk(levels, 1, outer[i].sign, outer[i].good, partial[t]);
        }
      });
    }
  }
  Tally total;
  for (const Tally& t : partial) {
    total.image += t.image;
    total.favourable += t.favourable;
  }
  return total;
}

Tally aggregate(const std::vector<Level>& levels) {
  // counts[s][g]: tuples so far with sign product s (0: +1, 1: -1) and
  // all-favourable flag g.
  u128 counts[2][2] = {{0, 1}, {0, 0}};
  for (const Level& lv : levels) {
    u64 local[2][2] = {{0, 0}, {0, 0}};
    for (const Cell& c : lv.cells) ++local[c.sign == 1 ? 0 : 1][c.good ? 1 : 0];
    u128 next[2][2] = {{0, 0}, {0, 0}};
    for (int s = 0; s < 2; ++s)
      for (int g = 0; g < 2; ++g)
        for (int ls = 0; ls < 2; ++ls)
          for (int lg = 0; lg < 2; ++lg) next[s ^ ls][g & lg] += counts[s][g] * local[ls][lg];
    for (int s = 0; s < 2; ++s)
      for (int g = 0; g < 2; ++g) {
        counts[s][g] = next[s][g];
        if (counts[s][g] >> 63) throw Error(ErrorCode::TooLarge, "tuple count exceeds 63 bits");
      }
  }
  return {static_cast<u64>(counts[0][0] + counts[0][1]), static_cast<u64>(counts[0][1])};
}

}  // namespace

EnumerationResult enumerate_density(const EntangleSpec& spec, EnumerationStrategy strategy,
                                    unsigned threads) {
  const bool restricted = is_one_mod_four(spec.disc);
  std::vector<u64> universe = spec.primes;
  if (restricted) {
    universe.push_back(2);
    for (u64 l : disc_primes(spec.disc)) universe.push_back(l);
    std::sort(universe.begin(), universe.end());
    universe.erase(std::unique(universe.begin(), universe.end()), universe.end());
  }

  u128 full = 1;
  bool enumerable = true;
  for (u64 l : universe) {
    if (l > kMaxBruteForceEll) enumerable = false;
    full *= gl2_order(l);
    if (full >> 63) enumerable = false;
  }
  const bool cartesian_fits = enumerable && full <= kCartesianBudget;

  if (strategy == EnumerationStrategy::Auto) {
    strategy = cartesian_fits ? EnumerationStrategy::Cartesian : EnumerationStrategy::Aggregate;
  }
  if (!enumerable || (strategy == EnumerationStrategy::Cartesian && !cartesian_fits)) {
    throw Error(ErrorCode::TooLarge, "enumeration over " + std::to_string(universe.size()) +
                                         " primes exceeds the budget");
  }

  const auto levels = build_levels(spec, universe, restricted);
  Tally tally = strategy == EnumerationStrategy::Cartesian ? cartesian(levels, threads) : aggregate(levels);

  EnumerationResult r;
  r.strategy = strategy;
  r.universe = universe;
  r.full_size = static_cast<u64>(full);
  r.image_size = tally.image;
  r.favourable = tally.favourable;
  r.density = Rational(static_cast<i128>(tally.favourable), static_cast<i128>(tally.image));
  return r;
}

}  // namespace gcdens
