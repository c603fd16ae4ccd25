#include "gcdens/survey.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <fstream>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "gcdens/error.hpp"

namespace gcdens {

u64 prime_seed(u64 seed, const WeierstrassCurve& curve, u64 p) {
  u64 state = seed;
  for (i64 a : {curve.a1, curve.a2, curve.a3, curve.a4, curve.a6}) {
    state ^= static_cast<u64>(a);
    splitmix64(state);
  }
  state ^= p;
  return splitmix64(state);
}

Rational SurveyReport::empirical_density_exact() const {
  if (counts.good_primes == 0) return Rational{0};
  return Rational(static_cast<i128>(counts.gcd_ok), static_cast<i128>(counts.good_primes));
}

double SurveyReport::empirical_density() const {
  if (counts.good_primes == 0) return 0.0;
  return static_cast<double>(counts.gcd_ok) / static_cast<double>(counts.good_primes);
}

namespace {

PrimeRecord survey_prime(const WeierstrassCurve& curve, u64 p, u64 seed) {
  const ReducedCurve e = reduce_mod_p(curve, p);
  const TraceResult tr = count_points(e, prime_seed(seed, curve, p));
  PrimeRecord r;
  r.p = p;
  r.ap = tr.ap;
  r.cardinality = tr.cardinality;
  r.method = tr.method;
  r.gcd_ok = gcd(p - 1, tr.cardinality) == 1;
  r.anomalous = is_anomalous(tr);
  r.re_member = r.gcd_ok && tr.cardinality % p != 0;
  return r;
}

}  // namespace

SurveyCounts tally(const std::vector<PrimeRecord>& records) {
  SurveyCounts c;
  c.good_primes = records.size();
  for (const auto& r : records) {
    c.gcd_ok += r.gcd_ok;
    c.re_member += r.re_member;
    c.anomalous += r.anomalous;
  }
  c.total_primes = c.good_primes;
  return c;
}

SurveyReport run_survey(const WeierstrassCurve& curve, u64 limit, const SurveyConfig& config) {
  if (limit < 100) throw Error(ErrorCode::InvalidInput, "survey limit must be at least 100");
  if (limit > (u64{1} << 32)) throw Error(ErrorCode::InvalidInput, "survey limit must be at most 2^32");

  SurveyReport report;
  report.curve = curve;
  report.limit = limit;
  report.seed = config.seed;

  const auto primes = sieve_primes(limit);
  std::vector<std::optional<PrimeRecord>> slots(primes.size());

  // Contiguous chunks; each slot is written by exactly one thread.
  const unsigned threads =
      std::max(1u, std::min<unsigned>(config.threads, static_cast<unsigned>(primes.size())));
  std::exception_ptr failure;
  std::mutex failure_mu;
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        try {
          const std::size_t begin = primes.size() * t / threads;
          const std::size_t end = primes.size() * (t + 1) / threads;
          for (std::size_t i = begin; i < end; ++i) {
            if (to_residue(curve.delta, primes[i]) == 0) continue;
            slots[i] = survey_prime(curve, primes[i], config.seed);
          }
        } catch (...) {
          std::lock_guard lock(failure_mu);
          if (!failure) failure = std::current_exception();
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);

  report.records.reserve(primes.size());
  for (std::size_t i = 0; i < primes.size(); ++i) {
    if (slots[i]) {
      report.records.push_back(*slots[i]);
    } else {
      report.skipped.push_back(primes[i]);
    }
  }
  report.counts = tally(report.records);
  report.counts.total_primes = primes.size();
  report.local_events = local_event_table(report);
  report.conjecture = curve_conjecture(curve, config.constant_limit, config.threads);
  return report;
}

std::vector<LocalEventRow> local_event_table(const SurveyReport& report) {
  std::vector<LocalEventRow> rows;
  for (u64 l = 2; l <= kMaxEventEll; ++l) {
    if (!is_prime(l)) continue;
    LocalEventRow row;
    row.ell = l;
    row.trials = report.records.size();
    for (const auto& r : report.records) {
      if ((r.p - 1) % l == 0 && r.cardinality % l == 0) ++row.events;
    }
    row.predicted = bad_event_rate(l);
    const double q = static_cast<double>(row.predicted.to_long_double());
    if (row.trials > 0) {
      const double n = static_cast<double>(row.trials);
      row.observed = static_cast<double>(row.events) / n;
      row.std_error = std::sqrt(q * (1 - q) / n);
      row.z_score = (row.observed - q) / row.std_error;
    }
    rows.push_back(row);
  }
  return rows;
}

Verdict judge_local_events(const std::vector<LocalEventRow>& rows, const std::vector<u64>& ells) {
  Verdict v = Verdict::Pass;
  for (const auto& row : rows) {
    if (std::find(ells.begin(), ells.end(), row.ell) == ells.end()) continue;
    const double z = std::fabs(row.z_score);
    if (z >= 4.0) return Verdict::Fail;
    if (z >= 3.0) v = Verdict::Warn;
  }
  return v;
}

void write_csv(const SurveyReport& report, std::ostream& out) {
  out << "p,ap,cardinality,gcd_ok,re_member,anomalous,method\n";
  for (const auto& r : report.records) {
    out << r.p << ',' << r.ap << ',' << r.cardinality << ',' << int{r.gcd_ok} << ','
        << int{r.re_member} << ',' << int{r.anomalous} << ',' << to_string(r.method) << '\n';
  }
}

namespace {

nlohmann::json exact(const Rational& r) {
  return {{"num", static_cast<i64>(r.num())}, {"den", static_cast<i64>(r.den())}};
}

}  // namespace

void write_json(const SurveyReport& report, std::ostream& out) {
  using nlohmann::json;
  json events = json::array();
  for (const auto& row : report.local_events) {
    events.push_back({{"ell", row.ell},
                      {"events", row.events},
                      {"trials", row.trials},
                      {"observed", row.observed},
                      {"predicted", exact(row.predicted)},
                      {"std_error", row.std_error},
                      {"z_score", row.z_score}});
  }
  const auto& cj = report.conjecture;
  json doc = {
      {"curve", report.curve.to_string()},
      {"X", report.limit},
      {"seed", report.seed},
      {"discriminant", report.curve.delta},
      {"counts",
       {{"total_primes", report.counts.total_primes},
        {"good_primes", report.counts.good_primes},
        {"gcd_ok", report.counts.gcd_ok},
        {"re_member", report.counts.re_member},
        {"anomalous", report.counts.anomalous}}},
      {"skipped_primes", report.skipped},
      {"empirical_density", report.empirical_density()},
      {"empirical_density_exact", exact(report.empirical_density_exact())},
      {"local_events", events},
      {"conjecture",
       {{"value", static_cast<double>(cj.estimate.value)},
        {"error_bound", static_cast<double>(cj.estimate.error_bound)},
        {"truncation_prime", cj.estimate.truncation_prime},
        {"universal_constant", static_cast<double>(cj.universal.value)},
        {"discriminant", cj.discriminant},
        {"fundamental_discriminant", cj.fundamental_discriminant},
        {"correction", exact(cj.correction)},
        {"serre_assumed", true},
        {"non_serre", cj.non_serre}}},
  };
  out << doc.dump(2) << '\n';
}

namespace {

template <typename Writer>
void write_file(const std::filesystem::path& path, Writer&& writer) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::Io, "cannot open " + path.string() + " for writing");
  writer(out);
  out.flush();
  if (!out) throw Error(ErrorCode::Io, "write failed for " + path.string());
}

}  // namespace

void emit_csv(const SurveyReport& report, const std::filesystem::path& path) {
  write_file(path, [&](std::ostream& out) { write_csv(report, out); });
}

void emit_json(const SurveyReport& report, const std::filesystem::path& path) {
  write_file(path, [&](std::ostream& out) { write_json(report, out); });
}

std::vector<PrimeRecord> read_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path.string());
  std::string line;
  if (!std::getline(in, line) || line != "p,ap,cardinality,gcd_ok,re_member,anomalous,method") {
    throw Error(ErrorCode::Io, path.string() + ": unexpected CSV header");
  }
  std::vector<PrimeRecord> out;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ss(line);
    PrimeRecord r;
    int gcd_ok = 0, re = 0, anom = 0;
    char c1, c2, c3, c4, c5, c6;
    std::string method;
    if (!(ss >> r.p >> c1 >> r.ap >> c2 >> r.cardinality >> c3 >> gcd_ok >> c4 >> re >> c5 >> anom >> c6 >>
          method)) {
      throw Error(ErrorCode::Io, path.string() + ":" + std::to_string(lineno) + ": malformed row");
    }
    r.gcd_ok = gcd_ok != 0;
    r.re_member = re != 0;
    r.anomalous = anom != 0;
    if (method == "NaiveEnum") {
      r.method = CountMethod::NaiveEnum;
    } else if (method == "CharSum") {
      r.method = CountMethod::CharSum;
    } else if (method == "BSGS") {
      r.method = CountMethod::BSGS;
    } else {
      throw Error(ErrorCode::Io, path.string() + ":" + std::to_string(lineno) + ": unknown method " + method);
    }
    out.push_back(r);
  }
  return out;
}

}  // namespace gcdens
