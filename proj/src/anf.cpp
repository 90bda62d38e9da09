#include "qlint/anf.hpp"

#include <bit>

namespace qlint {

namespace {

// The binary Moebius transform is its own inverse.
void moebius_inplace(std::vector<std::uint8_t>& v) {
  const std::size_t size = v.size();
  for (std::size_t h = 1; h < size; h <<= 1) {
    for (std::size_t i = 0; i < size; i += h << 1) {
      for (std::size_t j = i; j < i + h; ++j) {
        v[j + h] ^= v[j];
      }
    }
  }
}

}  // namespace

AnfPolynomial truth_table_to_anf(const TruthTable& f) {
  AnfPolynomial p;
  p.n = f.n;
  p.coefficients = f.bits;
  moebius_inplace(p.coefficients);
  return p;
}

TruthTable anf_to_truth_table(const AnfPolynomial& p) {
  TruthTable f = make_table(p.n);
  f.bits = p.coefficients;
  moebius_inplace(f.bits);
  return f;
}

int degree(const AnfPolynomial& p) {
  int deg = 0;
  for (std::size_t m = 0; m < p.coefficients.size(); ++m) {
    if (p.coefficients[m]) {
      deg = std::max(deg, std::popcount(static_cast<std::uint32_t>(m)));
    }
  }
  return deg;
}

bool is_affine(const TruthTable& f) { return degree(truth_table_to_anf(f)) <= 1; }

}  // namespace qlint
