#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <sstream>

#include "qlint/sweep.hpp"
#include "qlint/testers.hpp"
#include "qlint/truth_table.hpp"

using namespace qlint;

namespace {

std::string csv_string(const SweepResult& result) {
  std::ostringstream out;
  write_sweep_csv(result, out);
  return out.str();
}

}  // namespace

TEST_CASE("fit_exponent recovers an exact power law") {
  std::vector<std::pair<double, double>> points;
  for (double eps : {0.3, 0.1, 0.03, 0.01, 0.003}) {
    points.emplace_back(eps, std::pow(eps, -0.5));
  }
  const FitResult fit = fit_exponent(points);
  CHECK(fit.slope == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(fit.residual == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(fit.points == 5);

  std::vector<std::pair<double, double>> linear;
  for (double eps : {0.2, 0.05, 0.02, 0.008}) {
    linear.emplace_back(eps, 2.0 / eps);
  }
  CHECK(fit_exponent(linear).slope == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("fit_exponent rejects thin or narrow inputs") {
  std::vector<std::pair<double, double>> few = {{0.3, 2}, {0.03, 6}, {0.003, 20}};
  CHECK_THROWS_AS(fit_exponent(few), std::invalid_argument);

  std::vector<std::pair<double, double>> narrow = {
      {0.30, 2}, {0.25, 2}, {0.20, 3}, {0.15, 3}, {0.10, 4}};
  CHECK_THROWS_AS(fit_exponent(narrow), std::invalid_argument);

  // Points with t_star < 1 are skipped, and can starve the fit.
  std::vector<std::pair<double, double>> zeros = {
      {0.3, 0}, {0.1, 0}, {0.03, 0}, {0.01, 1}, {0.003, 2}};
  CHECK_THROWS_AS(fit_exponent(zeros), std::invalid_argument);
}

TEST_CASE("wilson interval brackets the point estimate") {
  const auto [lo, hi] = wilson_interval(667, 1000);
  CHECK(lo < 0.667);
  CHECK(hi > 0.667);
  CHECK(hi - lo < 0.07);
  const auto [zlo, zhi] = wilson_interval(0, 1000);
  CHECK(zlo == 0.0);
  CHECK(zhi > 0.0);
}

TEST_CASE("config JSON parsing") {
  const ExperimentConfig config = load_config_json(R"({
    "n": 10,
    "epsilons": [0.25, 0.125],
    "trials": 500,
    "target": 0.75,
    "algorithm": "dj",
    "policy": {"mode": "fixed", "t": 3},
    "seed": 7,
    "fixture": "bent"
  })");
  CHECK(config.n == 10);
  CHECK(config.epsilons == std::vector<double>{0.25, 0.125});
  CHECK(config.trials == 500);
  CHECK(config.target == doctest::Approx(0.75));
  CHECK(config.algorithm == "dj");
  CHECK(config.policy.mode == IterationPolicy::Mode::Fixed);
  CHECK(config.policy.t == 3);
  CHECK(config.seed == 7);
  CHECK(config.fixture == Fixture::Bent);

  const ExperimentConfig defaults = load_config_json(R"({"algorithm": "grover"})");
  CHECK(defaults.n == 12);
  CHECK(defaults.epsilons == ExperimentConfig::default_grid());
  CHECK(defaults.trials == 2000);
  CHECK(defaults.target == doctest::Approx(2.0 / 3.0));

  CHECK_THROWS(load_config_json(R"({"fixture": "mystery"})"));
  CHECK_THROWS(load_config_json("not json"));
}

TEST_CASE("run_sweep rejects infeasible configurations") {
  ExperimentConfig config;
  config.n = 6;
  config.algorithm = "dj";
  config.trials = 10;
  config.epsilons = {0.3};  // ceil(0.3 * 64) = 20 >= 16 = 2^{n-2}
  CHECK_THROWS_AS(run_sweep(config), std::invalid_argument);

  config.epsilons = {0.1};
  config.trials = 0;
  CHECK_THROWS_AS(run_sweep(config), std::invalid_argument);

  config.trials = 10;
  config.algorithm = "nope";
  CHECK_THROWS_AS(run_sweep(config), std::invalid_argument);
}

TEST_CASE("dj sweep t_star tracks the exact crossing") {
  ExperimentConfig config;
  config.n = 8;
  config.algorithm = "dj";
  config.epsilons = {0.25, 0.125};
  config.trials = 800;
  config.seed = 5;
  const SweepResult result = run_sweep(config);
  REQUIRE(result.points.size() == 2);

  std::mt19937_64 rng(17);
  for (std::size_t i = 0; i < config.epsilons.size(); ++i) {
    const double eps = config.epsilons[i];
    const auto k = static_cast<std::uint32_t>(std::ceil(eps * 256.0));
    // Exact crossing averaged over a fixture sample.
    int exact_t = 1;
    for (; exact_t < 50; ++exact_t) {
      double mean_error = 0.0;
      for (int rep = 0; rep < 50; ++rep) {
        const auto omega = static_cast<std::uint32_t>(rng() % 256);
        mean_error += exact_algorithm2_error(
            plant_distance(8, omega, static_cast<int>(rng() & 1), k, rng), exact_t);
      }
      if (1.0 - mean_error / 50.0 >= config.target) break;
    }
    CHECK(std::abs(result.points[i].t_star - exact_t) <= 1);
    CHECK(result.points[i].wilson_low <= result.points[i].success_rate);
    CHECK(result.points[i].success_rate <= result.points[i].wilson_high);
    CHECK(result.points[i].mean_queries > 0.0);
  }
}

TEST_CASE("sweep output is byte-identical across runs and thread counts") {
  ExperimentConfig config;
  config.n = 8;
  config.algorithm = "grover";
  config.epsilons = {0.25, 0.125, 0.0625};
  config.trials = 300;
  config.seed = 11;

  setenv("QLINT_THREADS", "1", 1);
  const std::string serial = csv_string(run_sweep(config));
  const std::string again = csv_string(run_sweep(config));
  setenv("QLINT_THREADS", "4", 1);
  const std::string parallel = csv_string(run_sweep(config));
  unsetenv("QLINT_THREADS");

  CHECK(serial == again);
  CHECK(serial == parallel);
  CHECK(serial.rfind("epsilon,t_star,success_rate,mean_queries,wilson_low,"
                     "wilson_high\n", 0) == 0);
}

TEST_CASE("affine control fixtures never reject") {
  for (const char* algorithm : {"blr", "dj", "grover"}) {
    ExperimentConfig config;
    config.n = 7;
    config.algorithm = algorithm;
    config.fixture = Fixture::Affine;
    config.epsilons = {0.1};
    config.trials = 300;
    config.t_cap = 8;
    config.seed = 23;
    const SweepResult result = run_sweep(config);
    REQUIRE(result.points.size() == 1);
    CHECK(result.points[0].t_star == -1);  // target never reached
    CHECK(result.points[0].success_rate == 0.0);
  }
}

TEST_CASE("sweep CSV round trips through the fit reader") {
  SweepResult result;
  for (auto [eps, t] : {std::pair{0.25, 2}, {0.1, 4}, {0.05, 6}, {0.02, 10},
                        {0.01, 14}}) {
    SweepPoint p;
    p.epsilon = eps;
    p.t_star = t;
    result.points.push_back(p);
  }
  std::istringstream in(csv_string(result));
  const auto points = read_sweep_csv(in);
  REQUIRE(points.size() == 5);
  CHECK(points[0] == std::pair{0.25, 2.0});
  CHECK(points[4] == std::pair{0.01, 14.0});
  CHECK_NOTHROW(fit_exponent(points));
}

TEST_CASE("bent fixture sweeps accept large epsilon only") {
  ExperimentConfig config;
  config.n = 8;
  config.algorithm = "dj";
  config.fixture = Fixture::Bent;
  config.epsilons = {0.49};  // bent nl = 120 < ceil(0.49 * 256)
  config.trials = 50;
  CHECK_THROWS_AS(run_sweep(config), std::invalid_argument);

  config.epsilons = {0.25};
  config.trials = 200;
  const SweepResult result = run_sweep(config);
  CHECK(result.points[0].t_star == 1);  // flat spectrum rejects almost surely
}
