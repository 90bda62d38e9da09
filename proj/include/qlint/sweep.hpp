#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qlint/testers.hpp"

namespace qlint {

enum class Fixture { Planted, Bent, RandomFar, Affine };

Fixture fixture_from_string(const std::string& name);
const char* to_string(Fixture fixture);

struct ExperimentConfig {
  int n = 12;
  std::vector<double> epsilons;
  int trials = 2000;
  double target = 2.0 / 3.0;
  std::string algorithm = "grover";  // blr | dj | grover
  IterationPolicy policy = IterationPolicy::exact_theta();
  std::uint64_t seed = 42;
  Fixture fixture = Fixture::Planted;
  int t_cap = 1 << 15;  // search gives up past this; t_star = -1

  /// The geometric default grid (factor sqrt(2), one decade) used for
  /// the scaling experiments at n = 12.
  static std::vector<double> default_grid();
};

ExperimentConfig load_config_file(const std::string& path);
ExperimentConfig load_config_json(const std::string& text);

struct SweepPoint {
  double epsilon = 0.0;
  int t_star = -1;  // minimal t reaching target; -1 if never reached
  double success_rate = 0.0;
  double mean_queries = 0.0;
  double wilson_low = 0.0;
  double wilson_high = 0.0;
};

struct FitResult {
  double slope = 0.0;
  double residual = 0.0;
  int points = 0;

  std::string to_json() const;
};

struct SweepResult {
  std::vector<SweepPoint> points;
  double fitted_exponent = 0.0;
  double fit_residual = 0.0;
};

/// For each epsilon: generate `trials` seeded fixtures, run the chosen
/// tester, and search the minimal iteration count t_star whose
/// empirical NotAffine rate reaches the target (doubling then
/// bisection, fresh seeds per probe). Deterministic given the config;
/// trials run in parallel capped by QLINT_THREADS.
SweepResult run_sweep(const ExperimentConfig& config);

/// Least-squares slope of log10(t_star) versus log10(1/epsilon);
/// residual is the RMS deviation of the fit. Points with t_star < 1
/// are skipped. Requires >= 4 usable points and an epsilon span of at
/// least one decade across the input.
FitResult fit_exponent(const std::vector<std::pair<double, double>>& points);

/// CSV columns: epsilon,t_star,success_rate,mean_queries,wilson_low,wilson_high
void write_sweep_csv(const SweepResult& result, std::ostream& out);
std::string sweep_to_json(const ExperimentConfig& config, const SweepResult& result);
std::vector<std::pair<double, double>> read_sweep_csv(std::istream& in);

/// Wilson score interval for wins successes out of trials (z = 1.96).
std::pair<double, double> wilson_interval(std::int64_t wins, std::int64_t trials);

/// Worker cap: QLINT_THREADS if set, else hardware concurrency.
int worker_count();

}  // namespace qlint
