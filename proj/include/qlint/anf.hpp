#pragma once

#include <cstdint>
#include <vector>

#include "qlint/truth_table.hpp"

namespace qlint {

/// Algebraic normal form of an n-variable function. coefficients[m] is
/// the coefficient of the monomial prod_{j : bit j of m} x_{j+1};
/// mask 0 is the constant term a0.
struct AnfPolynomial {
  int n = 0;
  std::vector<std::uint8_t> coefficients;
};

/// Binary Moebius transform; inverse of anf_to_truth_table.
AnfPolynomial truth_table_to_anf(const TruthTable& f);
TruthTable anf_to_truth_table(const AnfPolynomial& p);

/// Max popcount of a mask with nonzero coefficient; 0 for constants.
int degree(const AnfPolynomial& p);

/// degree <= 1, i.e. the function is affine.
bool is_affine(const TruthTable& f);

}  // namespace qlint
