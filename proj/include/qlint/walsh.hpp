#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <iosfwd>

#include "qlint/truth_table.hpp"

namespace qlint {

/// Walsh spectrum of an n-variable function: 2^n signed integers
/// W_f(omega) = sum_x (-1)^{f(x) xor omega.x}, same bit convention as
/// TruthTable. Every entry has the parity of 2^n and |entry| <= 2^n;
/// sum of squares is exactly 2^{2n} (Parseval).
struct WalshSpectrum {
  int n = 0;
  Eigen::Vector<std::int64_t, Eigen::Dynamic> values;
};

/// In-place fast Walsh-Hadamard butterfly over any dense Eigen vector.
/// Applying it twice multiplies the input by 2^n.
template <typename Derived>
void hadamard_butterfly(Eigen::MatrixBase<Derived>& v) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index size = v.size();
  for (Eigen::Index h = 1; h < size; h <<= 1) {
    for (Eigen::Index i = 0; i < size; i += h << 1) {
      for (Eigen::Index j = i; j < i + h; ++j) {
        const Scalar a = v(j);
        const Scalar b = v(j + h);
        v(j) = a + b;
        v(j + h) = a - b;
      }
    }
  }
}

/// Fast transform of the sign vector (-1)^{f(x)}; O(n 2^n), bit-exact.
WalshSpectrum walsh_transform(const TruthTable& f);

/// W_f(omega) / 2^n, in [-1, 1]. Throws on omega out of range.
double normalized_walsh(const TruthTable& f, std::uint32_t omega);
double normalized_value(const WalshSpectrum& spectrum, std::uint32_t omega);

/// nl(f) = 2^{n-1} - max_omega |W_f(omega)| / 2; equals the minimum
/// Hamming distance from f to the 2^{n+1} affine functions.
int nonlinearity(const WalshSpectrum& spectrum);
int nonlinearity(const TruthTable& f);

/// True iff nl(f) >= ceil(eps 2^n). Requires 0 < eps < 1/2.
bool epsilon_far_from_affine(const TruthTable& f, double eps);

/// CSV with columns omega,walsh,normalized.
void write_spectrum_csv(const WalshSpectrum& spectrum, std::ostream& out);

}  // namespace qlint
