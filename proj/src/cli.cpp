#include "hodge/cli.hpp"

#include <fstream>

namespace hodge {

namespace {

constexpr const char * determinism_note =
  "Output depends only on the configuration above: no timestamps, host data or worker counts; "
  "floats carry 15 significant digits.";

MetricParams metric_of(const RunConfig & cfg)
{
  return MetricParams(cfg.a, cfg.b, cfg.c.value_or(1.0), cfg.group);
}

Json config_echo(const RunConfig & cfg)
{
  auto opt = [](const std::optional<double> & v) { return v ? number(*v) : Json(nullptr); };
  return Json{
    {"a", number(cfg.a)},
    {"b", number(cfg.b)},
    {"c", opt(cfg.c)},
    {"group", to_string(cfg.group)},
    {"degree", cfg.degree},
    {"k_max", cfg.k_max},
    {"seed", cfg.seed},
    {"samples", cfg.samples},
    {"box", Json::array({number(cfg.lo), number(cfg.hi)})},
    {"k_probe", cfg.k_probe},
    {"volume", opt(cfg.volume)},
    {"scal", opt(cfg.scal)},
    {"lambda1", opt(cfg.lambda1)},
    {"ric2", opt(cfg.ric2)},
    {"format", cfg.format},
  };
}

Json spectrum_result(const RunConfig & cfg, Json & rows)
{
  if (cfg.degree != 0 && cfg.degree != 1) { throw UsageError("--degree must be 0 or 1"); }
  SpectrumOptions opts;
  opts.workers = cfg.workers;
  const auto s = full_spectrum(metric_of(cfg), cfg.degree, cfg.k_max, opts);
  rows = spectrum_rows(s);
  return Json{{"metric", to_json(s.metric)}, {"min_nonzero", number(s.min_above(0.0))}, {"entries", s.entries.size()}};
}

Json berger_result(const RunConfig & cfg, Json & rows)
{
  const double c = cfg.c.value_or(cfg.b);
  if (std::abs(cfg.b - c) > 1e-12 * std::max(cfg.b, c)) {
    throw UsageError("berger requires b = c (got b = " + std::to_string(cfg.b) + ", c = " + std::to_string(c) + ")");
  }
  const BergerParams p(cfg.a, cfg.b);
  rows = berger_rows(p, cfg.group, cfg.k_max);
  return Json{{"metric", to_json(p.metric(cfg.group))},
              {"kappa", number(p.kappa())},
              {"first_eigenvalue", number(berger_first_eigenvalue(p, cfg.group))}};
}

Json curl_result(const RunConfig & cfg, bool & pass)
{
  const auto m = metric_of(cfg);
  const int k_max = std::max(cfg.k_max, 1);

  // (abc·T⁻¹Curl₀)² against the diagonal of Δ₁⁽⁰⁾.
  const auto d0 = assemble_delta1(WeightIndex(0), m);
  double max_dev = 0.0;
  Json squares = Json::array();
  for (int i = 0; i < 3; ++i) {
    const auto twice = curl_g_on_invariant(curl_g_on_invariant(LeftInvariantForm::basis(i), m), m);
    const double lhs = twice.coefficients[i].real();
    const double rhs = d0.entries(i, i).real();
    max_dev = std::max(max_dev, std::abs(lhs - rhs) / std::abs(rhs));
    squares.push_back({{"curl_squared", number(lhs)}, {"delta1_k0", number(rhs)}});
  }
  const bool factor_ok = max_dev <= 1e-12;

  const auto bound = coexact_bound_check(m, k_max);
  const auto round = round_curl_spectrum(k_max);
  pass = factor_ok && bound.pass() && round.pass;
  return Json{{"metric", to_json(m)},
              {"factorization", {{"basis", squares}, {"max_rel_dev", number(max_dev)}, {"pass", factor_ok}}},
              {"coexact_bound", to_json(bound)},
              {"round_curl", to_json(round)},
              {"pass", pass}};
}

SpectralInvariants invariants_of(const RunConfig & cfg)
{
  if (!cfg.volume || !cfg.scal || !cfg.lambda1) { throw UsageError("invert needs --volume, --scal and --lambda1"); }
  SpectralInvariants si;
  si.volume = *cfg.volume;
  si.scal = *cfg.scal;
  si.lambda1 = *cfg.lambda1;
  si.group = cfg.group;
  si.norm_ric2 = cfg.ric2;
  return si;
}

}  // namespace

std::string version()
{
  return HODGE_SPECTRA_VERSION;
}

RunOutcome execute(const RunConfig & cfg)
{
  if (cfg.k_max < 0) { throw UsageError("--k-max must be non-negative"); }
  if (cfg.format != "json" && cfg.format != "csv") { throw UsageError("--format must be json or csv"); }

  RunOutcome outcome;
  Json & report = outcome.report;
  report["tool"] = "hodge-spectra";
  report["version"] = version();
  report["command"] = cfg.command;
  report["config"] = config_echo(cfg);
  report["determinism"] = determinism_note;

  Json rows;
  bool pass = true;
  try {
    if (cfg.command == "spectrum") {
      report["result"] = spectrum_result(cfg, rows);
    } else if (cfg.command == "berger") {
      report["result"] = berger_result(cfg, rows);
    } else if (cfg.command == "lambda1") {
      const auto m = metric_of(cfg);
      report["result"] = {{"metric", to_json(m)}, {"lambda1", to_json(lambda1_formula(m))}};
    } else if (cfg.command == "certify") {
      const auto m = metric_of(cfg);
      CertifyOptions opts;
      opts.k_probe = cfg.k_probe;
      report["result"] = {{"metric", to_json(m)}, {"lambda1", to_json(certify_lambda1(m, opts))}};
    } else if (cfg.command == "stress") {
      StressOptions opts;
      opts.seed = cfg.seed;
      opts.samples = cfg.samples;
      opts.k_max = cfg.k_max;
      opts.lo = cfg.lo;
      opts.hi = cfg.hi;
      opts.group = cfg.group;
      opts.workers = cfg.workers;
      const auto r = stress_test(opts);
      pass = r.pass();
      report["result"] = to_json(r);
    } else if (cfg.command == "invert") {
      report["result"] = to_json(invert(invariants_of(cfg)));
    } else if (cfg.command == "curl-check") {
      report["result"] = curl_result(cfg, pass);
    } else {
      throw UsageError("unknown command '" + cfg.command + "'");
    }
  } catch (const DomainError & e) {
    throw UsageError(e.what());
  } catch (const ConjectureViolation & e) {
    pass = false;
    report["result"] = {{"error", "conjecture_violation"}, {"message", e.what()}};
  } catch (const InconsistentInvariants & e) {
    pass = false;
    report["result"] = {{"error", "inconsistent_invariants"}, {"message", e.what()}};
  } catch (const AmbiguousInversion & e) {
    pass = false;
    report["result"] = {{"error", "ambiguous_inversion"}, {"message", e.what()}};
  } catch (const ConsistencyError & e) {
    pass = false;
    report["result"] = {{"error", "consistency"}, {"message", e.what()}};
  }
  if (!rows.is_null()) { report["rows"] = rows; }
  report["status"] = pass ? "pass" : "fail";
  outcome.exit_code = pass ? exit_ok : exit_failed;
  return outcome;
}

int run(const RunConfig & config, std::ostream & out, std::ostream & err)
{
  RunOutcome outcome;
  try {
    outcome = execute(config);
  } catch (const UsageError & e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }
  const std::string text = config.format == "csv" ? dump_csv(outcome.report) : dump_json(outcome.report);
  if (config.output) {
    std::ofstream file(*config.output, std::ios::binary);
    if (!file) {
      err << "error: cannot write " << *config.output << '\n';
      return exit_usage;
    }
    file << text;
  } else {
    out << text;
  }
  if (outcome.exit_code != exit_ok) { err << "check failed, see report status\n"; }
  return outcome.exit_code;
}

}  // namespace hodge
