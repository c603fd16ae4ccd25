#pragma once

// Empirical survey of #E(F_p) over all good primes p <= X.

#include <filesystem>
#include <iosfwd>
#include <vector>

#include "gcdens/conjecture.hpp"
#include "gcdens/count.hpp"
#include "gcdens/curve.hpp"
#include "gcdens/rational.hpp"

namespace gcdens {

struct SurveyConfig {
  u64 seed = 0;
  unsigned threads = 1;
  // Truncation bound for the conjecture snapshot.
  u64 constant_limit = 1'000'000;
};

struct PrimeRecord {
  u64 p = 0;
  i64 ap = 0;
  u64 cardinality = 0;
  bool gcd_ok = false;     // gcd(p - 1, #E(F_p)) = 1
  bool re_member = false;  // gcd(p (p - 1), #E(F_p)) = 1
  bool anomalous = false;  // p | #E(F_p)
  CountMethod method = CountMethod::CharSum;

  friend bool operator==(const PrimeRecord&, const PrimeRecord&) = default;
};

struct SurveyCounts {
  u64 total_primes = 0;
  u64 good_primes = 0;
  u64 gcd_ok = 0;
  u64 re_member = 0;
  u64 anomalous = 0;

  friend bool operator==(const SurveyCounts&, const SurveyCounts&) = default;
};

// Largest l in the local event table.
inline constexpr u64 kMaxEventEll = 31;

struct LocalEventRow {
  u64 ell = 0;
  u64 events = 0;  // good p with p = 1 mod l and l | #E(F_p)
  u64 trials = 0;  // good primes
  double observed = 0;
  Rational predicted;  // l / ((l-1)^2 (l+1))
  double std_error = 0;
  double z_score = 0;
};

struct SurveyReport {
  WeierstrassCurve curve;
  u64 limit = 0;
  u64 seed = 0;
  SurveyCounts counts;
  std::vector<PrimeRecord> records;  // good primes, increasing
  std::vector<u64> skipped;          // primes dividing the discriminant
  std::vector<LocalEventRow> local_events;
  CurveConjecture conjecture;

  Rational empirical_density_exact() const;
  double empirical_density() const;
};

// Requires limit >= 100 (Error(InvalidInput) otherwise) and limit <= 2^32.
SurveyReport run_survey(const WeierstrassCurve& curve, u64 limit, const SurveyConfig& config = {});

std::vector<LocalEventRow> local_event_table(const SurveyReport& report);

SurveyCounts tally(const std::vector<PrimeRecord>& records);

enum class Verdict { Pass, Warn, Fail };

// 3 sigma warns, 4 sigma fails; evaluated over the given l values.
Verdict judge_local_events(const std::vector<LocalEventRow>& rows, const std::vector<u64>& ells);

// Deterministic per-(curve, p) seed for point sampling.
u64 prime_seed(u64 seed, const WeierstrassCurve& curve, u64 p);

void write_csv(const SurveyReport& report, std::ostream& out);
void write_json(const SurveyReport& report, std::ostream& out);
// Throw Error(Io) naming the path on failure.
void emit_csv(const SurveyReport& report, const std::filesystem::path& path);
void emit_json(const SurveyReport& report, const std::filesystem::path& path);
std::vector<PrimeRecord> read_csv(const std::filesystem::path& path);

}  // namespace gcdens
