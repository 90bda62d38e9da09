#include "qlint/testers.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <json.hpp>

#include "qlint/state_vector.hpp"
#include "qlint/walsh.hpp"

namespace qlint {

const char* to_string(Verdict v) {
  return v == Verdict::Affine ? "Affine" : "NotAffine";
}

std::string TestReport::to_json() const {
  nlohmann::json j;
  j["verdict"] = to_string(verdict);
  j["queries"] = queries;
  j["iterations"] = iterations;
  j["seed"] = seed;
  j["transcript"] = transcript;
  return j.dump();
}

IterationPolicy IterationPolicy::paper_epsilon(double eps) {
  if (!(eps > 0.0 && eps < 0.5)) {
    throw std::invalid_argument("policy epsilon must satisfy 0 < eps < 1/2");
  }
  return {Mode::PaperEpsilon, eps, 0};
}

IterationPolicy IterationPolicy::exact_theta() { return {Mode::ExactTheta, 0.0, 0}; }

IterationPolicy IterationPolicy::fixed(int t) {
  if (t < 0) throw std::invalid_argument("fixed iteration count must be >= 0");
  return {Mode::Fixed, 0.0, t};
}

int iterations_for_theta(double theta) {
  const double t = std::numbers::pi / (4.0 * theta) - 0.5;
  return t <= 0.0 ? 0 : static_cast<int>(std::lround(t));
}

TestReport blr_test(const TruthTable& f, int t, std::uint64_t seed) {
  if (t < 1) throw std::invalid_argument("blr_test needs t >= 1");
  std::mt19937_64 rng(seed);
  TestReport report;
  report.seed = seed;
  const std::uint8_t a0 = f(0);
  report.queries = 1;
  std::uniform_int_distribution<std::uint32_t> draw(
      0, static_cast<std::uint32_t>(f.size()) - 1);
  for (int round = 0; round < t; ++round) {
    std::uint32_t x = draw(rng);
    std::uint32_t y = draw(rng);
    while (y == x) y = draw(rng);
    report.transcript.insert(report.transcript.end(), {x, y, x ^ y});
    report.queries += 3;
    report.iterations = round + 1;
    if (f(x ^ y) != (a0 ^ f(x) ^ f(y))) {
      report.verdict = Verdict::NotAffine;
      return report;
    }
  }
  report.verdict = Verdict::Affine;
  return report;
}

TestReport dj_repetition_test(const TruthTable& f, int t, std::uint64_t seed) {
  if (t < 1) throw std::invalid_argument("dj_repetition_test needs t >= 1");
  std::mt19937_64 rng(seed);
  TestReport report;
  report.seed = seed;
  QueryCounter counter;
  const StateVector psi = deutsch_jozsa_state(f, counter);
  const std::uint32_t a0 = measure(psi, rng);
  report.transcript.push_back(a0);
  for (int i = 1; i <= t; ++i) {
    counter.count += 1;  // re-preparation of D_f|0>
    const std::uint32_t ai = measure(psi, rng);
    report.transcript.push_back(ai);
    report.iterations = i;
    if (ai != a0) {
      report.verdict = Verdict::NotAffine;
      report.queries = counter.count;
      return report;
    }
  }
  report.verdict = Verdict::Affine;
  report.queries = counter.count;
  return report;
}

TestReport grover_test(const TruthTable& f, const IterationPolicy& policy,
                       std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  TestReport report;
  report.seed = seed;
  QueryCounter counter;
  const StateVector start = deutsch_jozsa_state(f, counter);
  const std::uint32_t a0 = measure(start, rng);
  counter.count += 1;  // re-preparation after the measurement
  const MarkedOracle g{f.n, a0};

  int t = 0;
  switch (policy.mode) {
    case IterationPolicy::Mode::PaperEpsilon:
      t = iterations_for_theta(std::asin(std::sqrt(2.0 * policy.epsilon)));
      break;
    case IterationPolicy::Mode::ExactTheta: {
      const AngleSplit split = angle_split(start, a0);
      t = split.u < 1e-12 ? 0 : iterations_for_theta(split.theta);
      break;
    }
    case IterationPolicy::Mode::Fixed:
      t = policy.t;
      break;
  }

  StateVector psi = start;
  for (int i = 0; i < t; ++i) {
    psi = grover_iterate(psi, start, g, counter);
  }
  const std::uint32_t at = measure(psi, rng);
  report.transcript = {a0, at};
  report.iterations = t;
  report.queries = counter.count;
  report.verdict = at != a0 ? Verdict::NotAffine : Verdict::Affine;
  return report;
}

double exact_algorithm2_error(const TruthTable& f, int t) {
  if (t < 0) throw std::invalid_argument("t must be >= 0");
  const WalshSpectrum s = walsh_transform(f);
  const double scale = static_cast<double>(f.size());
  double total = 0.0;
  for (Eigen::Index z = 0; z < s.values.size(); ++z) {
    const double nw2 = std::pow(static_cast<double>(s.values(z)) / scale, 2);
    total += std::pow(nw2, t + 1);
  }
  return total;
}

double exact_algorithm3_success(const TruthTable& f, int t) {
  if (t < 0) throw std::invalid_argument("t must be >= 0");
  const WalshSpectrum s = walsh_transform(f);
  const double scale = static_cast<double>(f.size());
  double total = 0.0;
  for (Eigen::Index z = 0; z < s.values.size(); ++z) {
    const double v = static_cast<double>(s.values(z)) / scale;
    if (v == 0.0) continue;  // never measured as a0
    const double u = std::sqrt(std::max(0.0, 1.0 - v * v));
    const double theta = std::atan2(u, v);
    const double amp = std::sin((2.0 * t + 1.0) * theta);
    total += v * v * amp * amp;
  }
  return total;
}

}  // namespace qlint
