#pragma once

#include <cstdint>
#include <iosfwd>
#include <random>
#include <string>
#include <vector>

namespace qlint {

// Hard representation cap; default test profiles stay at n <= 14.
inline constexpr int kMaxVars = 24;

/// An n-variable Boolean function as its 2^n-entry truth table.
/// Entry i is f(x) where bit j of i carries the value of x_{j+1},
/// i.e. x_1 is the least-significant bit and varies fastest.
struct TruthTable {
  int n = 0;
  std::vector<std::uint8_t> bits;

  std::size_t size() const { return bits.size(); }
  std::uint8_t operator()(std::uint32_t x) const { return bits[x]; }
};

/// All-zero function on n variables. Throws std::invalid_argument for
/// n outside [1, kMaxVars].
TruthTable make_table(int n);

/// l(x) = omega . x  (inner product mod 2).
TruthTable make_linear(int n, std::uint32_t omega);

/// a0 xor omega . x.
TruthTable make_affine(int n, std::uint32_t omega, int a0);

/// Inner-product bent function x1 x2 + x3 x4 + ... + x_{n-1} x_n.
/// Requires even n >= 2; its nonlinearity is 2^{n-1} - 2^{n/2-1}.
TruthTable make_bent(int n);

/// Uniform random truth table, each bit independent.
TruthTable random_function(int n, std::mt19937_64& rng);

/// make_affine(n, omega, a0) with k distinct uniformly chosen entries
/// flipped. For k < 2^{n-2} the result has nonlinearity exactly k.
TruthTable plant_distance(int n, std::uint32_t omega, int a0, std::uint32_t k,
                          std::mt19937_64& rng);

/// Number of disagreeing truth-table entries. Throws on mismatched n.
int hamming_distance(const TruthTable& f, const TruthTable& g);

int hamming_weight(const TruthTable& f);

/// Line-oriented text format:
///   n=<int>
///   <2^n bits as a hex string, bit i = bit i of the hex value>
void save_table(const TruthTable& f, std::ostream& out);
TruthTable load_table(std::istream& in);
TruthTable load_table_file(const std::string& path);
void save_table_file(const TruthTable& f, const std::string& path);

}  // namespace qlint
