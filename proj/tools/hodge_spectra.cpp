#include <iostream>

#include "CLI11.hpp"

#include "hodge/cli.hpp"

namespace {

void metric_flags(CLI::App * cmd, hodge::RunConfig & cfg, std::string & group)
{
  cmd->add_option("--a", cfg.a, "Scaling of E1")->capture_default_str();
  cmd->add_option("--b", cfg.b, "Scaling of E2")->capture_default_str();
  cmd->add_option("--c", cfg.c, "Scaling of E3 (berger: defaults to b)");
  cmd->add_option("--group", group, "su2 or so3")->check(CLI::IsMember({"su2", "so3"}))->capture_default_str();
}

}  // namespace

int main(int argc, char ** argv)
{
  hodge::RunConfig cfg;
  std::string group = "su2";

  CLI::App app{"Hodge-Laplacian spectra of left-invariant metrics on SU(2) and SO(3)"};
  app.set_version_flag("--version", hodge::version());
  app.require_subcommand(1);
  app.add_option("--format", cfg.format, "json or csv")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  app.add_option("--output,-o", cfg.output, "Write the report here instead of stdout");
  app.add_option("--workers", cfg.workers, "Worker threads (default: HODGE_SPECTRA_WORKERS or all cores)");
  app.add_option("--k-max", cfg.k_max, "Largest weight k")->capture_default_str();
  app.fallthrough();

  auto * spectrum = app.add_subcommand("spectrum", "Spectrum of Δ0 or Δ1 for weights k <= k-max");
  metric_flags(spectrum, cfg, group);
  spectrum->add_option("--degree", cfg.degree, "0 (functions) or 1 (1-forms)")->capture_default_str();

  auto * berger = app.add_subcommand("berger", "Closed-form spectrum of the Berger metric (a, b, b)");
  metric_flags(berger, cfg, group);

  auto * lambda1 = app.add_subcommand("lambda1", "Closed-form first eigenvalue");
  metric_flags(lambda1, cfg, group);

  auto * certify = app.add_subcommand("certify", "Certify the first eigenvalue with Gershgorin bounds");
  metric_flags(certify, cfg, group);
  certify->add_option("--k-probe", cfg.k_probe, "Largest weight probed by the bound")->capture_default_str();

  auto * stress = app.add_subcommand("stress", "Seeded Monte Carlo check of the first eigenvalue");
  stress->add_option("--group", group, "su2 or so3")->check(CLI::IsMember({"su2", "so3"}))->capture_default_str();
  stress->add_option("--seed", cfg.seed, "RNG seed")->capture_default_str();
  stress->add_option("--samples", cfg.samples, "Number of random metrics")->capture_default_str();
  stress->add_option("--lo", cfg.lo, "Lower edge of the sampling box")->capture_default_str();
  stress->add_option("--hi", cfg.hi, "Upper edge of the sampling box")->capture_default_str();

  auto * invert = app.add_subcommand("invert", "Recover (a, b, c) from volume, Scal and lambda1");
  invert->add_option("--group", group, "su2 or so3")->check(CLI::IsMember({"su2", "so3"}))->capture_default_str();
  invert->add_option("--volume", cfg.volume, "Riemannian volume")->required();
  invert->add_option("--scal", cfg.scal, "Scalar curvature")->required();
  invert->add_option("--lambda1", cfg.lambda1, "First non-zero eigenvalue of Δ1")->required();
  invert->add_option("--ric2", cfg.ric2, "Squared Ricci norm, used only to separate ambiguous candidates");

  auto * curl = app.add_subcommand("curl-check", "Curl factorization and coexact lower bound");
  metric_flags(curl, cfg, group);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError & e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : hodge::exit_usage;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  cfg.group = hodge::parse_group(group);
  return hodge::run(cfg, std::cout, std::cerr);
}
