#include "qlint/state_vector.hpp"

#include <cmath>
#include <cstdlib>
#include <ostream>
#include <stdexcept>

#include "qlint/walsh.hpp"

namespace qlint {

namespace {

void require_same_dim(int a, int b) {
  if (a != b) throw std::invalid_argument("qubit count mismatch");
}

}  // namespace

StateVector deutsch_jozsa_state(const TruthTable& f, QueryCounter& counter) {
  StateVector psi;
  psi.n = f.n;
  psi.amps.resize(static_cast<Eigen::Index>(f.size()));
  for (std::size_t x = 0; x < f.size(); ++x) {
    psi.amps(static_cast<Eigen::Index>(x)) = f.bits[x] ? -1.0 : 1.0;
  }
  hadamard_butterfly(psi.amps);
  psi.amps /= static_cast<double>(f.size());
  counter.count += 1;
  return psi;
}

StateVector apply_marked_oracle(const StateVector& psi, const MarkedOracle& g) {
  require_same_dim(psi.n, g.n);
  StateVector out;
  out.n = psi.n;
  out.amps = -psi.amps;
  out.amps(g.a0) = psi.amps(g.a0);
  return out;
}

StateVector reflect_about(const StateVector& psi, const StateVector& axis,
                          QueryCounter& counter) {
  require_same_dim(psi.n, axis.n);
  StateVector out;
  out.n = psi.n;
  const double overlap = axis.amps.dot(psi.amps);
  out.amps = 2.0 * overlap * axis.amps - psi.amps;
  counter.count += 2;
  return out;
}

StateVector grover_iterate(const StateVector& psi, const StateVector& start,
                           const MarkedOracle& g, QueryCounter& counter) {
  return reflect_about(apply_marked_oracle(psi, g), start, counter);
}

std::uint32_t measure(const StateVector& psi, std::mt19937_64& rng) {
  const double norm2 = psi.amps.squaredNorm();
  if (std::abs(norm2 - 1.0) > 1e-9) {
    throw std::runtime_error("measure: state norm deviates from 1");
  }
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double draw = unit(rng) * norm2;
  double acc = 0.0;
  const Eigen::Index last = psi.amps.size() - 1;
  for (Eigen::Index z = 0; z < last; ++z) {
    acc += psi.amps(z) * psi.amps(z);
    if (draw < acc) return static_cast<std::uint32_t>(z);
  }
  return static_cast<std::uint32_t>(last);
}

AngleSplit angle_split(const StateVector& psi, std::uint32_t a0) {
  AngleSplit split;
  split.v = psi.amps(a0);
  split.u = std::sqrt(std::max(0.0, 1.0 - split.v * split.v));
  split.theta = std::atan2(split.u, split.v);
  return split;
}

double mass_outside(const StateVector& psi, std::uint32_t a0) {
  return psi.amps.squaredNorm() - psi.amps(a0) * psi.amps(a0);
}

void write_state_csv(const StateVector& psi, std::ostream& out) {
  out << "index,amplitude\n";
  char buf[64];
  for (Eigen::Index z = 0; z < psi.amps.size(); ++z) {
    std::snprintf(buf, sizeof buf, "%.17g", psi.amps(z));
    out << z << ',' << buf << '\n';
  }
}

}  // namespace qlint
