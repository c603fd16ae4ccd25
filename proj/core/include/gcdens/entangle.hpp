#pragma once

// Exact densities of primes avoiding the events (p = 1 mod l and l | #E(F_p))
// for every l in a finite set S, for a Serre curve with quadratic
// discriminant D; with an enumeration oracle over products of GL_2(F_l).

#include <map>
#include <span>
#include <vector>

#include "gcdens/gl2.hpp"
#include "gcdens/rational.hpp"

namespace gcdens {

struct EntangleSpec {
  std::vector<u64> primes;  // S, sorted and distinct
  i64 disc = 1;             // fundamental discriminant D

  // Sorts and validates: every member of S prime, D a fundamental
  // discriminant other than 1. Throws Error(InvalidInput).
  static EntangleSpec make(std::vector<u64> primes, i64 disc);

  // D = 1 mod 4 and every prime of 2D lies in S.
  bool needs_correction() const;
};

// Distinct primes dividing D.
std::vector<u64> disc_primes(i64 disc);

// prod_{l in S} (1 - l / ((l-1)^2 (l+1))). Throws Error(Overflow) once the
// reduced denominator leaves 128 bits (about eight small primes).
Rational delta_S(std::span<const u64> primes);

// 1 + prod_{l | D} -l / (l^3 - l^2 - 2l + 1). Throws Error(WrongCase) unless
// D = 1 mod 4 and D != 1.
Rational correction_factor(i64 disc);

// delta_S, times correction_factor(D) when the spec needs_correction().
Rational density_S(const EntangleSpec& spec);

using MatrixTuple = std::map<u64, Mat2>;

// prod_{l | D} (det M_l / l) == sgn2(M_2). Throws Error(MissingComponent)
// when M_2 or some M_l with l | D is absent; Error(WrongCase) unless D = 1 mod 4.
bool serre_member(const MatrixTuple& tuple, i64 disc);

enum class EnumerationStrategy { Auto, Cartesian, Aggregate };

// Tuple budget for the Cartesian strategy.
inline constexpr u64 kCartesianBudget = 10'000'000;

struct EnumerationResult {
  Rational density;
  EnumerationStrategy strategy = EnumerationStrategy::Cartesian;
  std::vector<u64> universe;  // primes enumerated: S together with the primes of 2D
  u64 full_size = 0;          // prod |GL_2(F_l)| over the universe
  u64 image_size = 0;         // tuples in the image (restricted product)
  u64 favourable = 0;         // image tuples non-special at every l in S
};

// Counts tuples (M_l) over the universe lying in the image of the adelic
// representation of a Serre curve and non-special at every l in S, divided
// by the image size. For D = 1 mod 4 the universe is S plus the primes of 2D
// and the image is the restricted product; for D = 0 mod 4 the image is taken
// to be the full product over S. Throws Error(TooLarge) when the chosen
// strategy (or, for Auto, both) exceed their budgets.
EnumerationResult enumerate_density(const EntangleSpec& spec,
                                    EnumerationStrategy strategy = EnumerationStrategy::Auto,
                                    unsigned threads = 1);

}  // namespace gcdens
