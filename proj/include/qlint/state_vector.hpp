#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <iosfwd>
#include <random>

#include "qlint/truth_table.hpp"

namespace qlint {

/// Real-amplitude n-qubit state. All circuits simulated here (Hadamard
/// layers, phase oracles, reflections) are real-orthogonal, so the
/// imaginary part is identically zero and is not represented.
struct StateVector {
  int n = 0;
  Eigen::VectorXd amps;
};

/// Count of U_f invocations. Incremented only by operations documented
/// to consume oracle calls; measurement and the marked-pattern oracle
/// cost nothing.
struct QueryCounter {
  std::int64_t count = 0;
};

/// The classically known function g with g(x) = 0 exactly at x = a0.
/// Its phase oracle inverts the sign of every basis state except |a0>.
struct MarkedOracle {
  int n = 0;
  std::uint32_t a0 = 0;
};

/// D_f |0...0> with D_f = H^n U_f H^n; amplitude at z is NW_f(z).
/// Costs one U_f call.
StateVector deutsch_jozsa_state(const TruthTable& f, QueryCounter& counter);

/// Sign flip on every basis state except |a0>. Zero query cost.
StateVector apply_marked_oracle(const StateVector& psi, const MarkedOracle& g);

/// 2 <axis|psi> axis - psi. Billed at 2 U_f calls: the reflection about
/// D_f|0> factors as D_f (2|0><0| - I) D_f^{-1}.
StateVector reflect_about(const StateVector& psi, const StateVector& axis,
                          QueryCounter& counter);

/// One application of (2|Psi><Psi| - I) O_g; 2 U_f calls.
StateVector grover_iterate(const StateVector& psi, const StateVector& start,
                           const MarkedOracle& g, QueryCounter& counter);

/// Sample a basis index with probability amps[z]^2; non-destructive.
/// Throws if the norm deviates from 1 by more than 1e-9.
std::uint32_t measure(const StateVector& psi, std::mt19937_64& rng);

/// Decomposition Psi = u|X> + v|Y> with |Y> = |a0>: v = amps[a0],
/// u = +sqrt(1 - v^2), theta = atan2(u, v) in [0, pi]. A negative v is
/// absorbed as theta > pi/2, so u stays nonnegative.
struct AngleSplit {
  double u = 0.0;
  double v = 0.0;
  double theta = 0.0;
};
AngleSplit angle_split(const StateVector& psi, std::uint32_t a0);

/// Total probability mass outside basis index a0.
double mass_outside(const StateVector& psi, std::uint32_t a0);

/// CSV with columns index,amplitude.
void write_state_csv(const StateVector& psi, std::ostream& out);

}  // namespace qlint
