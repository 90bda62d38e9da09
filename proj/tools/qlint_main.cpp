// qlint: desk-scale laboratory for linearity testing of Boolean functions.
//
// Subcommands:
//   analyze <table>   spectrum summary, nonlinearity, epsilon-distance
//   test              run one tester on a truth-table file, print a report
//   sweep             epsilon sweep from a JSON config, write CSV + JSON
//   fit <csv>         log-log slope of t_star versus 1/epsilon
//   gen               write fixture truth-table files

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <random>
#include <string>

#include <CLI11.hpp>

#include "qlint/anf.hpp"
#include "qlint/sweep.hpp"
#include "qlint/testers.hpp"
#include "qlint/truth_table.hpp"
#include "qlint/walsh.hpp"

namespace {

int run_analyze(const std::string& path, const std::string& csv_out) {
  const qlint::TruthTable f = qlint::load_table_file(path);
  const qlint::WalshSpectrum spectrum = qlint::walsh_transform(f);
  Eigen::Index peak_at = 0;
  spectrum.values.cwiseAbs().maxCoeff(&peak_at);
  const int nl = qlint::nonlinearity(spectrum);
  const double size = static_cast<double>(f.size());
  std::cout << "n: " << f.n << "\n"
            << "weight: " << qlint::hamming_weight(f) << "\n"
            << "nonlinearity: " << nl << "\n"
            << "epsilon_distance: " << nl / size << "\n"
            << "walsh_peak: W(" << peak_at << ") = " << spectrum.values(peak_at)
            << "\n"
            << "anf_degree: " << qlint::degree(qlint::truth_table_to_anf(f))
            << "\n"
            << "affine: " << (nl == 0 ? "yes" : "no") << "\n";
  if (!csv_out.empty()) {
    std::ofstream out(csv_out);
    if (!out) throw std::runtime_error("cannot open " + csv_out);
    qlint::write_spectrum_csv(spectrum, out);
  }
  return 0;
}

int run_test(const std::string& path, const std::string& alg, double eps,
             int t, const std::string& policy_name, std::uint64_t seed) {
  const qlint::TruthTable f = qlint::load_table_file(path);
  qlint::TestReport report;
  if (alg == "blr") {
    if (t < 1) {
      if (eps <= 0.0) throw std::runtime_error("--alg blr needs --t or --eps");
      // ceil(3 / eps) rounds reject an eps-far function w.p. >= 2/3.
      t = static_cast<int>(std::ceil(3.0 / eps));
    }
    report = qlint::blr_test(f, t, seed);
  } else if (alg == "dj") {
    if (t < 1) {
      if (eps <= 0.0) throw std::runtime_error("--alg dj needs --t or --eps");
      // Smallest t with (1 - 2 eps)^t <= 1/3.
      t = static_cast<int>(
          std::ceil(std::log(3.0) / -std::log1p(-2.0 * eps)));
    }
    report = qlint::dj_repetition_test(f, t, seed);
  } else if (alg == "grover") {
    qlint::IterationPolicy policy = qlint::IterationPolicy::exact_theta();
    if (policy_name == "paper") {
      if (eps <= 0.0) throw std::runtime_error("--policy paper needs --eps");
      policy = qlint::IterationPolicy::paper_epsilon(eps);
    } else if (policy_name == "fixed") {
      policy = qlint::IterationPolicy::fixed(std::max(0, t));
    } else if (policy_name != "exact") {
      throw std::runtime_error("--policy must be paper, exact or fixed");
    }
    report = qlint::grover_test(f, policy, seed);
  } else {
    throw std::runtime_error("--alg must be blr, dj or grover");
  }
  std::cout << report.to_json() << "\n";
  return 0;
}

int run_sweep_cmd(const std::string& config_path, const std::string& prefix) {
  const qlint::ExperimentConfig config = qlint::load_config_file(config_path);
  const qlint::SweepResult result = qlint::run_sweep(config);
  {
    std::ofstream csv(prefix + ".csv");
    if (!csv) throw std::runtime_error("cannot open " + prefix + ".csv");
    qlint::write_sweep_csv(result, csv);
  }
  {
    std::ofstream json(prefix + ".json");
    if (!json) throw std::runtime_error("cannot open " + prefix + ".json");
    json << qlint::sweep_to_json(config, result) << "\n";
  }
  std::cout << "wrote " << prefix << ".csv and " << prefix << ".json\n";
  return 0;
}

int run_fit(const std::string& csv_path) {
  std::ifstream in(csv_path);
  if (!in) throw std::runtime_error("cannot open " + csv_path);
  const auto points = qlint::read_sweep_csv(in);
  std::cout << qlint::fit_exponent(points).to_json() << "\n";
  return 0;
}

int run_gen(const std::string& kind, int n, std::uint32_t omega, int a0,
            std::uint32_t k, std::uint64_t seed, const std::string& out) {
  std::mt19937_64 rng(seed);
  qlint::TruthTable f;
  if (kind == "linear") f = qlint::make_linear(n, omega);
  else if (kind == "affine") f = qlint::make_affine(n, omega, a0);
  else if (kind == "bent") f = qlint::make_bent(n);
  else if (kind == "random") f = qlint::random_function(n, rng);
  else if (kind == "planted") f = qlint::plant_distance(n, omega, a0, k, rng);
  else throw std::runtime_error("--kind must be linear, affine, bent, random or planted");
  qlint::save_table_file(f, out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"linearity testing of Boolean functions: spectra, simulators, sweeps"};
  app.require_subcommand(1);

  std::string table_path, csv_out;
  auto* analyze = app.add_subcommand("analyze", "spectrum and distance summary");
  analyze->add_option("table", table_path, "truth-table file")->required();
  analyze->add_option("--csv", csv_out, "also write the full spectrum as CSV");

  std::string alg = "grover", policy_name = "exact";
  double eps = 0.0;
  int t = 0;
  std::uint64_t seed = 1;
  auto* test = app.add_subcommand("test", "run one tester, print a JSON report");
  test->add_option("table", table_path, "truth-table file")->required();
  test->add_option("--alg", alg, "blr | dj | grover")->required();
  test->add_option("--eps", eps, "epsilon for derived iteration counts");
  test->add_option("--t", t, "explicit iteration count");
  test->add_option("--policy", policy_name, "grover policy: paper | exact | fixed");
  test->add_option("--seed", seed, "run seed");

  std::string config_path, prefix = "sweep";
  auto* sweep = app.add_subcommand("sweep", "epsilon sweep from a JSON config");
  sweep->add_option("--config", config_path, "JSON config file")->required();
  sweep->add_option("--out", prefix, "output prefix (.csv/.json)");

  std::string fit_csv;
  auto* fit = app.add_subcommand("fit", "fit scaling exponent from a sweep CSV");
  fit->add_option("csv", fit_csv, "sweep CSV file")->required();

  std::string kind = "random", gen_out = "table.txt";
  int n = 8, a0 = 0;
  std::uint32_t omega = 0, k = 0;
  auto* gen = app.add_subcommand("gen", "write a fixture truth-table file");
  gen->add_option("--kind", kind, "linear | affine | bent | random | planted");
  gen->add_option("--n", n, "variable count");
  gen->add_option("--omega", omega, "linear mask");
  gen->add_option("--a0", a0, "constant term");
  gen->add_option("--k", k, "planted distance");
  gen->add_option("--seed", seed, "generator seed");
  gen->add_option("--out", gen_out, "output file");

  try {
    app.parse(argc, argv);
    if (*analyze) return run_analyze(table_path, csv_out);
    if (*test) return run_test(table_path, alg, eps, t, policy_name, seed);
    if (*sweep) return run_sweep_cmd(config_path, prefix);
    if (*fit) return run_fit(fit_csv);
    if (*gen) return run_gen(kind, n, omega, a0, k, seed, gen_out);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
