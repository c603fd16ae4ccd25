#include "cli.hpp"

#include <algorithm>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gcdens/conjecture.hpp"
#include "gcdens/count.hpp"
#include "gcdens/entangle.hpp"
#include "gcdens/error.hpp"
#include "gcdens/gl2.hpp"
#include "gcdens/survey.hpp"

namespace gcdens::cli {

namespace {

std::vector<u64> parse_prime_set(const std::string& text) {
  std::vector<u64> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) {
      throw Error(ErrorCode::InvalidInput, "--set expects comma-separated primes, got '" + text + "'");
    }
    out.push_back(v);
  }
  return out;
}

std::string fixed(long double v, int digits) {
  std::ostringstream os;
  os << std::setprecision(digits) << std::fixed << v;
  return os.str();
}

int cmd_constant(u64 limit, unsigned threads, std::ostream& out) {
  const auto c = universal_constant(limit, threads);
  nlohmann::ordered_json doc = {{"value", static_cast<double>(c.value)},
                                {"error_bound", static_cast<double>(c.error_bound)},
                                {"truncation_prime", c.truncation_prime}};
  out << doc.dump(2) << '\n';
  return kExitOk;
}

int cmd_conjecture(const std::string& curve_text, u64 limit, unsigned threads, std::ostream& out,
                   std::ostream& err) {
  const auto curve = parse_curve(curve_text);
  const auto cj = curve_conjecture(curve, limit, threads);
  if (cj.non_serre) {
    err << "warning: discriminant " << curve.delta
        << " is a perfect square; the curve is not a Serre curve and the conjecture does not apply\n";
  }
  nlohmann::ordered_json doc = {{"value", static_cast<double>(cj.estimate.value)},
                                {"error_bound", static_cast<double>(cj.estimate.error_bound)},
                                {"truncation_prime", cj.estimate.truncation_prime},
                                {"discriminant", cj.discriminant},
                                {"fundamental_discriminant", cj.fundamental_discriminant},
                                {"correction_num", static_cast<i64>(cj.correction.num())},
                                {"correction_den", static_cast<i64>(cj.correction.den())},
                                {"serre_assumed", true}};
  out << doc.dump(2) << '\n';
  return kExitOk;
}

int cmd_ap(const std::string& curve_text, u64 prime, u64 seed, std::ostream& out) {
  const auto curve = parse_curve(curve_text);
  const auto e = reduce_mod_p(curve, prime);
  const auto tr = count_points(e, prime_seed(seed, curve, prime));
  out << "p=" << tr.p << " ap=" << tr.ap << " cardinality=" << tr.cardinality
      << " method=" << to_string(tr.method) << " anomalous=" << (is_anomalous(tr) ? 1 : 0) << '\n';
  return kExitOk;
}

int cmd_survey(const std::string& curve_text, u64 limit, const std::string& csv, const std::string& json,
               u64 seed, unsigned threads, std::ostream& out, std::ostream& err) {
  const auto curve = parse_curve(curve_text);
  SurveyConfig cfg;
  cfg.seed = seed;
  cfg.threads = threads;
  const auto report = run_survey(curve, limit, cfg);
  if (!csv.empty()) emit_csv(report, csv);
  if (!json.empty()) emit_json(report, json);

  const auto& c = report.counts;
  out << "curve " << curve.to_string() << "  discriminant " << curve.delta << "  X=" << limit << '\n';
  out << "primes " << c.total_primes << "  good " << c.good_primes << "  skipped " << report.skipped.size()
      << '\n';
  out << "gcd_ok " << c.gcd_ok << "  re_member " << c.re_member << "  anomalous " << c.anomalous << '\n';
  out << "empirical density " << fixed(report.empirical_density(), 6) << "  conjectured "
      << fixed(report.conjecture.estimate.value, 6) << " (D=" << report.conjecture.fundamental_discriminant
      << ", correction " << report.conjecture.correction << ")\n";
  out << "  l   events   observed   predicted       z\n";
  for (const auto& row : report.local_events) {
    out << std::setw(3) << row.ell << std::setw(9) << row.events << "   " << fixed(row.observed, 6) << "   "
        << fixed(row.predicted.to_long_double(), 6) << "   " << fixed(row.z_score, 2) << '\n';
  }
  const Verdict v = judge_local_events(report.local_events, {2, 3, 5, 7});
  if (v == Verdict::Fail) {
    err << "FAIL: a local bad-event rate (l <= 7) deviates by at least 4 standard errors\n";
    return kExitFail;
  }
  if (v == Verdict::Warn) {
    err << "warning: a local bad-event rate (l <= 7) deviates by at least 3 standard errors\n";
  }
  return kExitOk;
}

int cmd_verify_gl2(u64 ell, std::ostream& out) {
  bool ok = true;
  auto row = [&](const char* name, auto closed, auto brute) {
    bool pass = closed == brute;
    ok = ok && pass;
    out << std::left << std::setw(24) << name << std::right << std::setw(12) << closed << std::setw(14) << brute
        << "  " << (pass ? "PASS" : "FAIL") << '\n';
  };
  auto guarded = [&](const char* name, auto&& fn) {
    try {
      CountCheck c = fn(ell);
      row(name, c.closed_form, c.brute_force);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::MismatchedCount) throw;
      out << std::left << std::setw(24) << name << std::right << "  " << e.what() << "  FAIL\n";
      ok = false;
    }
  };
  out << "GL2(F_" << ell << ")\n";
  out << std::left << std::setw(24) << "quantity" << std::right << std::setw(12) << "closed-form" << std::setw(14)
      << "brute-force" << '\n';
  enumerate_gl2(ell);  // validates ell
  guarded("group order", count_group);
  guarded("special (det 1, tr 2)", count_special);
  guarded("centralizer of T", centralizer_order_T);
  guarded("class of T", class_size_T);
  if (ell == 2) {
    row("sgn sum (non-special)", i64{2}, sgn_sum_2());
  } else {
    row("chi(det) sum", -static_cast<i64>(ell * ell), chi_det_sum(ell));
  }
  return ok ? kExitOk : kExitFail;
}

int cmd_verify_entangle(i64 disc, const std::string& set_text, unsigned threads, std::ostream& out) {
  const auto spec = EntangleSpec::make(parse_prime_set(set_text), disc);
  const Rational closed = density_S(spec);
  out << "S = {";
  for (std::size_t i = 0; i < spec.primes.size(); ++i) out << (i ? "," : "") << spec.primes[i];
  out << "}  D = " << spec.disc << "  case: "
      << (spec.needs_correction() ? "entangled (2D | prod S)" : "independent") << '\n';
  out << "delta_S      " << delta_S(spec.primes) << '\n';
  out << "closed form  " << closed << '\n';

  bool ok = true;
  bool any = false;
  std::optional<Rational> oracle;
  for (auto strategy : {EnumerationStrategy::Cartesian, EnumerationStrategy::Aggregate}) {
    const char* name = strategy == EnumerationStrategy::Cartesian ? "cartesian" : "aggregate";
    try {
      const auto r = enumerate_density(spec, strategy, threads);
      any = true;
      out << std::left << std::setw(13) << name << std::right << r.density << "  (favourable " << r.favourable
          << " / image " << r.image_size << ", full product " << r.full_size << ")\n";
      if (!oracle) oracle = r.density;
      ok = ok && r.density == closed && r.density == *oracle;
      if (spec.disc % 4 != 0 && r.image_size * 2 != r.full_size) {
        out << "  restricted product is not of index 2\n";
        ok = false;
      }
    } catch (const Error& e) {
      if (e.code() != ErrorCode::TooLarge) throw;
      out << std::left << std::setw(13) << name << std::right << "skipped (" << e.what() << ")\n";
    }
  }
  if (!any) throw Error(ErrorCode::TooLarge, "no enumeration strategy fits the budget");
  out << closed << " = " << *oracle << ' ' << (ok ? "PASS" : "FAIL") << '\n';
  return ok ? kExitOk : kExitFail;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Density of primes p with gcd(#E(F_p), p - 1) = 1 for elliptic curves over Q", "gcdens"};
  app.require_subcommand(1);

  u64 limit = 1'000'000;
  unsigned threads = 1;
  u64 seed = 0;
  std::string curve_text;

  auto* constant = app.add_subcommand(
      "constant", "Universal constant C = prod_l (1 - l/((l-1)^2 (l+1))) truncated at --limit, with the certified "
                  "error bound 4/L");
  constant->add_option("--limit", limit, "Truncation bound L (>= 100)")->capture_default_str();
  constant->add_option("--threads", threads, "Worker threads")->capture_default_str();

  auto* conjecture = app.add_subcommand(
      "conjecture", "Conjectured density of primes with gcd(#E(F_p), p-1) = 1 for a Serre curve: C, times "
                    "1 + prod_{l|D} -l/(l^3-l^2-2l+1) when the field discriminant D of Q(sqrt(Delta)) is 1 mod 4");
  conjecture->add_option("--curve", curve_text, "Weierstrass coefficients a1,a2,a3,a4,a6")->required();
  conjecture->add_option("--limit", limit, "Truncation bound L for C")->capture_default_str();
  conjecture->add_option("--threads", threads, "Worker threads")->capture_default_str();

  std::string csv_path, json_path;
  u64 survey_limit = 0;
  auto* survey = app.add_subcommand(
      "survey", "Count #E(F_p) = p + 1 - a_p for all good p <= X; report the share with gcd(p-1, #E(F_p)) = 1, "
                "membership in R_E (gcd(p(p-1), #E(F_p)) = 1), anomalous primes (p | #E(F_p), a_p = 1 for "
                "p >= 7), and per-l rates of (p = 1 mod l and l | #E(F_p)) against l/((l-1)^2(l+1)). Exits 2 "
                "when a rate for l <= 7 is 4 standard errors off");
  survey->add_option("--curve", curve_text, "Weierstrass coefficients a1,a2,a3,a4,a6")->required();
  survey->add_option("--limit", survey_limit, "Survey bound X (100 <= X <= 2^32)")->required();
  survey->add_option("--csv", csv_path, "Write per-prime rows p,ap,cardinality,gcd_ok,re_member,anomalous,method");
  survey->add_option("--json", json_path, "Write the aggregate report as JSON");
  survey->add_option("--seed", seed, "Seed for random point sampling")->capture_default_str();
  survey->add_option("--threads", threads, "Worker threads (output is identical for any value)")
      ->capture_default_str();

  u64 ell = 0;
  auto* verify_gl2 = app.add_subcommand(
      "verify-gl2", "Brute-force vs closed form in GL2(F_l): order (l^2-1)(l^2-l), l^2 matrices with det 1 and "
                    "eigenvalue 1, centralizer of T=[[1,1],[0,1]] of size l^2-l, class of T of size l^2-1, "
                    "sum of (det/l) over the rest = -l^2 (sum of sgn = 2 at l = 2)");
  verify_gl2->add_option("--ell", ell, "Prime l <= 13")->required();

  i64 disc = 0;
  std::string set_text;
  auto* verify_entangle = app.add_subcommand(
      "verify-entangle", "Density of primes avoiding (p = 1 mod l and l | #E(F_p)) for all l in S on a Serre curve "
                         "with field discriminant D: closed form (delta_S, with the entanglement correction when "
                         "D = 1 mod 4 and 2D | prod S) against exhaustive enumeration of matrix tuples");
  verify_entangle->add_option("--disc", disc, "Fundamental discriminant D")->required();
  verify_entangle->add_option("--set", set_text, "Comma-separated primes S, e.g. 2,3")->required();
  verify_entangle->add_option("--threads", threads, "Worker threads for the Cartesian enumeration")
      ->capture_default_str();

  u64 prime = 0;
  auto* ap = app.add_subcommand("ap", "Trace of Frobenius a_p and #E(F_p) = p + 1 - a_p at one good prime");
  ap->add_option("--curve", curve_text, "Weierstrass coefficients a1,a2,a3,a4,a6")->required();
  ap->add_option("--prime", prime, "Prime p of good reduction")->required();
  ap->add_option("--seed", seed, "Seed for random point sampling")->capture_default_str();

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (constant->parsed()) return cmd_constant(limit, threads, out);
    if (conjecture->parsed()) return cmd_conjecture(curve_text, limit, threads, out, err);
    if (survey->parsed())
      return cmd_survey(curve_text, survey_limit, csv_path, json_path, seed, threads, out, err);
    if (verify_gl2->parsed()) return cmd_verify_gl2(ell, out);
    if (verify_entangle->parsed()) return cmd_verify_entangle(disc, set_text, threads, out);
    if (ap->parsed()) return cmd_ap(curve_text, prime, seed, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace gcdens::cli
