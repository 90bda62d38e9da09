#include "qlint/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <map>
#include <tuple>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "qlint/walsh.hpp"

namespace qlint {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
  return splitmix64(a ^ splitmix64(b));
}

std::uint32_t planted_flips(int n, double eps) {
  return static_cast<std::uint32_t>(
      std::ceil(eps * static_cast<double>(std::uint64_t{1} << n)));
}

TruthTable make_fixture(const ExperimentConfig& config, double eps,
                        std::mt19937_64& rng) {
  const auto size = static_cast<std::uint32_t>(std::uint64_t{1} << config.n);
  std::uniform_int_distribution<std::uint32_t> draw_omega(0, size - 1);
  switch (config.fixture) {
    case Fixture::Planted:
      return plant_distance(config.n, draw_omega(rng),
                            static_cast<int>(rng() & 1), planted_flips(config.n, eps),
                            rng);
    case Fixture::Bent:
      return make_bent(config.n);
    case Fixture::RandomFar: {
      const auto k = static_cast<int>(planted_flips(config.n, eps));
      for (int attempt = 0; attempt < 1000; ++attempt) {
        TruthTable f = random_function(config.n, rng);
        if (nonlinearity(f) >= k) return f;
      }
      throw std::runtime_error("random-far fixture: no sample reached the distance");
    }
    case Fixture::Affine:
      return make_affine(config.n, draw_omega(rng), static_cast<int>(rng() & 1));
  }
  throw std::logic_error("unreachable");
}

struct ProbeStats {
  std::int64_t wins = 0;
  std::int64_t queries = 0;
};

/// One Monte Carlo estimate of the NotAffine rate at iteration count t.
/// Each trial derives its own seed from (master, eps index, t, trial),
/// so parallel and serial schedules aggregate identically.
ProbeStats run_probe(const ExperimentConfig& config, std::size_t eps_index,
                     double eps, int t) {
  const int workers =
      std::max(1, std::min(worker_count(), config.trials));
  const std::uint64_t probe_key =
      mix(config.seed, mix(eps_index, static_cast<std::uint64_t>(t) + 1));

  std::vector<ProbeStats> partial(workers);
  auto work = [&](int w) {
    ProbeStats local;
    for (int trial = w; trial < config.trials; trial += workers) {
      std::mt19937_64 rng(mix(probe_key, static_cast<std::uint64_t>(trial)));
      const TruthTable f = make_fixture(config, eps, rng);
      const std::uint64_t tester_seed = rng();
      TestReport report;
      if (config.algorithm == "blr") {
        report = blr_test(f, std::max(1, t), tester_seed);
      } else if (config.algorithm == "dj") {
        report = dj_repetition_test(f, std::max(1, t), tester_seed);
      } else {
        report = grover_test(f, IterationPolicy::fixed(t), tester_seed);
      }
      local.wins += report.verdict == Verdict::NotAffine;
      local.queries += report.queries;
    }
    partial[w] = local;
  };

  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& th : pool) th.join();
  }

  ProbeStats total;
  for (const ProbeStats& p : partial) {
    total.wins += p.wins;
    total.queries += p.queries;
  }
  return total;
}

void validate(const ExperimentConfig& config) {
  if (config.trials < 1) throw std::invalid_argument("trials must be >= 1");
  if (config.t_cap < 1) throw std::invalid_argument("t_cap must be >= 1");
  if (config.epsilons.empty()) throw std::invalid_argument("no epsilons given");
  if (!(config.target > 0.0 && config.target < 1.0)) {
    throw std::invalid_argument("target must be in (0, 1)");
  }
  if (config.algorithm != "blr" && config.algorithm != "dj" &&
      config.algorithm != "grover") {
    throw std::invalid_argument("algorithm must be blr, dj or grover");
  }
  const std::uint64_t size = std::uint64_t{1} << config.n;
  for (double eps : config.epsilons) {
    if (!(eps > 0.0 && eps < 0.5)) {
      throw std::invalid_argument("every epsilon must satisfy 0 < eps < 1/2");
    }
    const std::uint32_t k = planted_flips(config.n, eps);
    if (config.fixture == Fixture::Planted && k > size / 4) {
      throw std::invalid_argument("infeasible epsilon for the planted fixture");
    }
    if (config.fixture == Fixture::Bent) {
      const TruthTable bent = make_bent(config.n);
      if (static_cast<std::uint32_t>(nonlinearity(bent)) < k) {
        throw std::invalid_argument("bent fixture is not epsilon-far at this epsilon");
      }
    }
  }
}

}  // namespace

int worker_count() {
  if (const char* env = std::getenv("QLINT_THREADS")) {
    const int v = std::atoi(env);
    if (v >= 1) return v;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

Fixture fixture_from_string(const std::string& name) {
  if (name == "planted") return Fixture::Planted;
  if (name == "bent") return Fixture::Bent;
  if (name == "random-far") return Fixture::RandomFar;
  if (name == "affine") return Fixture::Affine;
  throw std::invalid_argument("unknown fixture: " + name);
}

const char* to_string(Fixture fixture) {
  switch (fixture) {
    case Fixture::Planted: return "planted";
    case Fixture::Bent: return "bent";
    case Fixture::RandomFar: return "random-far";
    case Fixture::Affine: return "affine";
  }
  return "?";
}

std::vector<double> ExperimentConfig::default_grid() {
  return {0.25, 0.177, 0.125, 0.088, 0.0625, 0.044, 0.031, 0.022, 0.0156};
}

std::pair<double, double> wilson_interval(std::int64_t wins, std::int64_t trials) {
  constexpr double z = 1.96;
  const double nt = static_cast<double>(trials);
  const double p = static_cast<double>(wins) / nt;
  const double denom = 1.0 + z * z / nt;
  const double center = p + z * z / (2.0 * nt);
  const double radius =
      z * std::sqrt(p * (1.0 - p) / nt + z * z / (4.0 * nt * nt));
  return {(center - radius) / denom, (center + radius) / denom};
}

SweepResult run_sweep(const ExperimentConfig& config) {
  validate(config);
  const int kIterationCap = config.t_cap;
  const int t_min = config.algorithm == "grover" ? 0 : 1;

  SweepResult result;
  for (std::size_t i = 0; i < config.epsilons.size(); ++i) {
    const double eps = config.epsilons[i];
    std::map<int, ProbeStats> cache;
    auto success_at = [&](int t) {
      auto it = cache.find(t);
      if (it == cache.end()) {
        it = cache.emplace(t, run_probe(config, i, eps, t)).first;
      }
      return static_cast<double>(it->second.wins) / config.trials;
    };

    int t_star = -1;
    if (success_at(t_min) >= config.target) {
      t_star = t_min;
    } else {
      int lo = t_min;
      int hi = std::max(1, 2 * t_min);
      while (hi <= kIterationCap && success_at(hi) < config.target) {
        lo = hi;
        hi *= 2;
      }
      if (hi <= kIterationCap) {
        while (hi - lo > 1) {
          const int mid = lo + (hi - lo) / 2;
          if (success_at(mid) >= config.target) {
            hi = mid;
          } else {
            lo = mid;
          }
        }
        t_star = hi;
      }
    }

    const int report_t = t_star >= 0 ? t_star : t_min;
    const ProbeStats& stats = cache.at(report_t);
    SweepPoint point;
    point.epsilon = eps;
    point.t_star = t_star;
    point.success_rate = static_cast<double>(stats.wins) / config.trials;
    point.mean_queries =
        static_cast<double>(stats.queries) / config.trials;
    std::tie(point.wilson_low, point.wilson_high) =
        wilson_interval(stats.wins, config.trials);
    result.points.push_back(point);
  }

  for (std::size_t i = 1; i < result.points.size(); ++i) {
    if (config.epsilons[i] < config.epsilons[i - 1] &&
        result.points[i].t_star < result.points[i - 1].t_star) {
      std::cerr << "warning: t_star not monotone between eps="
                << config.epsilons[i - 1] << " and eps=" << config.epsilons[i]
                << "\n";
    }
  }

  std::vector<std::pair<double, double>> fit_points;
  for (const SweepPoint& p : result.points) {
    fit_points.emplace_back(p.epsilon, static_cast<double>(p.t_star));
  }
  try {
    const FitResult fit = fit_exponent(fit_points);
    result.fitted_exponent = fit.slope;
    result.fit_residual = fit.residual;
  } catch (const std::exception&) {
    result.fitted_exponent = std::numeric_limits<double>::quiet_NaN();
    result.fit_residual = std::numeric_limits<double>::quiet_NaN();
  }
  return result;
}

FitResult fit_exponent(const std::vector<std::pair<double, double>>& points) {
  if (points.empty()) throw std::invalid_argument("no points to fit");
  double eps_min = points.front().first;
  double eps_max = points.front().first;
  std::vector<std::pair<double, double>> usable;  // (log10(1/eps), log10 t)
  for (const auto& [eps, t] : points) {
    eps_min = std::min(eps_min, eps);
    eps_max = std::max(eps_max, eps);
    if (t >= 1.0) {
      usable.emplace_back(std::log10(1.0 / eps), std::log10(t));
    }
  }
  if (usable.size() < 4) {
    throw std::invalid_argument("need at least 4 points with t_star >= 1");
  }
  if (eps_max / eps_min < 10.0 - 1e-9) {
    throw std::invalid_argument("points must span at least one decade of epsilon");
  }

  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& [x, y] : usable) {
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double m = static_cast<double>(usable.size());
  const double denom = m * sxx - sx * sx;
  if (std::abs(denom) < 1e-12) {
    throw std::invalid_argument("degenerate epsilon span");
  }
  FitResult fit;
  fit.slope = (m * sxy - sx * sy) / denom;
  const double intercept = (sy - fit.slope * sx) / m;
  double ss = 0;
  for (const auto& [x, y] : usable) {
    const double d = y - (fit.slope * x + intercept);
    ss += d * d;
  }
  fit.residual = std::sqrt(ss / m);
  fit.points = static_cast<int>(usable.size());
  return fit;
}

std::string FitResult::to_json() const {
  nlohmann::json j;
  j["slope"] = slope;
  j["residual"] = residual;
  j["points"] = points;
  return j.dump();
}

void write_sweep_csv(const SweepResult& result, std::ostream& out) {
  out << "epsilon,t_star,success_rate,mean_queries,wilson_low,wilson_high\n";
  char buf[256];
  for (const SweepPoint& p : result.points) {
    std::snprintf(buf, sizeof buf, "%.10g,%d,%.10g,%.10g,%.10g,%.10g",
                  p.epsilon, p.t_star, p.success_rate, p.mean_queries,
                  p.wilson_low, p.wilson_high);
    out << buf << '\n';
  }
}

std::string sweep_to_json(const ExperimentConfig& config,
                          const SweepResult& result) {
  nlohmann::json j;
  j["n"] = config.n;
  j["algorithm"] = config.algorithm;
  j["fixture"] = to_string(config.fixture);
  j["trials"] = config.trials;
  j["target"] = config.target;
  j["seed"] = config.seed;
  j["points"] = nlohmann::json::array();
  for (const SweepPoint& p : result.points) {
    j["points"].push_back({{"epsilon", p.epsilon},
                           {"t_star", p.t_star},
                           {"success_rate", p.success_rate},
                           {"mean_queries", p.mean_queries},
                           {"wilson_low", p.wilson_low},
                           {"wilson_high", p.wilson_high}});
  }
  if (std::isfinite(result.fitted_exponent)) {
    j["fitted_exponent"] = result.fitted_exponent;
    j["fit_residual"] = result.fit_residual;
  } else {
    j["fitted_exponent"] = nullptr;
    j["fit_residual"] = nullptr;
  }
  return j.dump(2);
}

std::vector<std::pair<double, double>> read_sweep_csv(std::istream& in) {
  std::vector<std::pair<double, double>> points;
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("empty CSV");
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string eps_field, t_field;
    if (!std::getline(row, eps_field, ',') || !std::getline(row, t_field, ',')) {
      throw std::runtime_error("malformed CSV row: " + line);
    }
    points.emplace_back(std::stod(eps_field), std::stod(t_field));
  }
  return points;
}

namespace {

IterationPolicy policy_from_json(const nlohmann::json& j) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "exact-theta") return IterationPolicy::exact_theta();
    if (s == "paper-epsilon") {
      // Per-point epsilon is substituted at run time; sweeps probe Fixed(t).
      return IterationPolicy{IterationPolicy::Mode::PaperEpsilon, 0.25, 0};
    }
    throw std::invalid_argument("unknown policy: " + s);
  }
  const std::string mode = j.at("mode").get<std::string>();
  if (mode == "exact-theta") return IterationPolicy::exact_theta();
  if (mode == "paper-epsilon") {
    return IterationPolicy::paper_epsilon(j.at("epsilon").get<double>());
  }
  if (mode == "fixed") return IterationPolicy::fixed(j.at("t").get<int>());
  throw std::invalid_argument("unknown policy mode: " + mode);
}

}  // namespace

ExperimentConfig load_config_json(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  ExperimentConfig config;
  config.n = j.value("n", config.n);
  if (j.contains("epsilons")) {
    config.epsilons = j.at("epsilons").get<std::vector<double>>();
  } else {
    config.epsilons = ExperimentConfig::default_grid();
  }
  config.trials = j.value("trials", config.trials);
  config.target = j.value("target", config.target);
  config.algorithm = j.value("algorithm", config.algorithm);
  if (j.contains("policy")) config.policy = policy_from_json(j.at("policy"));
  config.seed = j.value("seed", config.seed);
  config.t_cap = j.value("t_cap", config.t_cap);
  if (j.contains("fixture")) {
    config.fixture = fixture_from_string(j.at("fixture").get<std::string>());
  }
  return config;
}

ExperimentConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return load_config_json(buffer.str());
}

}  // namespace qlint
