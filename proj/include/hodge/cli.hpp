#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include "hodge/report.hpp"

namespace hodge {

/// Exit codes of the command-line tool.
enum ExitCode : int { exit_ok = 0, exit_failed = 1, exit_usage = 2 };

struct RunConfig
{
  std::string command;  // spectrum, berger, lambda1, certify, stress, invert, curl-check
  double a = 1.0;
  double b = 1.0;
  std::optional<double> c;  // berger defaults c to b; elsewhere 1
  Group group = Group::SU2;
  int degree = 1;
  int k_max = 25;
  std::uint64_t seed = 1;
  int samples = 1000;
  double lo = 0.1;
  double hi = 10.0;
  int k_probe = 200;
  std::optional<double> volume;
  std::optional<double> scal;
  std::optional<double> lambda1;
  std::optional<double> ric2;
  std::string format = "json";
  std::optional<std::string> output;
  int workers = 0;  // not echoed: results do not depend on it
};

/// Thrown for invalid combinations of flags; maps to exit_usage.
class UsageError : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

struct RunOutcome
{
  Json report;
  int exit_code = exit_ok;
};

/// Runs one command and returns the report. Usage problems throw
/// UsageError; failed checks set exit_failed and are described in the report.
RunOutcome execute(const RunConfig & config);

/// execute() plus serialization to the configured format and destination.
/// Diagnostics go to `err`; returns the process exit code.
int run(const RunConfig & config, std::ostream & out, std::ostream & err);

std::string version();

}  // namespace hodge
