#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qlint/truth_table.hpp"

namespace qlint {

/// All three testers have one-sided error: NotAffine is never returned
/// for a truly affine input.
enum class Verdict { Affine, NotAffine };

const char* to_string(Verdict v);

struct TestReport {
  Verdict verdict = Verdict::Affine;
  std::int64_t queries = 0;   // U_f or classical f evaluations consumed
  int iterations = 0;         // t actually used
  std::vector<std::uint32_t> transcript;  // measured patterns / sampled triples
  std::uint64_t seed = 0;

  std::string to_json() const;
};

/// How the Grover tester picks its iteration count t.
struct IterationPolicy {
  enum class Mode {
    PaperEpsilon,  // t from the theta >= arcsin(sqrt(2 eps)) lower bound
    ExactTheta,    // t from the true theta of the prepared state (simulation only)
    Fixed,
  };
  Mode mode = Mode::Fixed;
  double epsilon = 0.0;
  int t = 0;

  static IterationPolicy paper_epsilon(double eps);
  static IterationPolicy exact_theta();
  static IterationPolicy fixed(int t);
};

/// (2t+1) theta ~ pi/2 rounded to the nearest nonnegative integer t.
int iterations_for_theta(double theta);

/// Classical BLR affinity test: a0 = f(0...0), then t rounds checking
/// f(x xor y) = a0 xor f(x) xor f(y) on random distinct x, y. Stops at
/// the first violation. queries = 1 + 3 * rounds executed; transcript
/// holds the sampled (x, y, x xor y) triples.
TestReport blr_test(const TruthTable& f, int t, std::uint64_t seed);

/// Prepare-and-measure D_f|0> once for a0, then up to t more times;
/// NotAffine on the first mismatch. queries = 1 + preparations executed
/// after the first; transcript holds the measured patterns.
TestReport dj_repetition_test(const TruthTable& f, int t, std::uint64_t seed);

/// Grover-amplified test: measure a0 from D_f|0>, re-prepare, apply t
/// iterates of (2|Psi><Psi| - I) O_g with the marked pattern a0, and
/// measure again. queries = 2 + 2t; transcript = {a0, a_t}.
TestReport grover_test(const TruthTable& f, const IterationPolicy& policy,
                       std::uint64_t seed);

/// Exact probability that Algorithm 2 with t check rounds outputs
/// Affine: sum_z NW_f(z)^{2(t+1)}.
double exact_algorithm2_error(const TruthTable& f, int t);

/// Exact probability that Algorithm 3 with t iterates outputs
/// NotAffine, averaged over the random first measurement:
/// sum_{a0} NW_f(a0)^2 sin^2((2t+1) theta_{a0}).
double exact_algorithm3_success(const TruthTable& f, int t);

}  // namespace qlint
