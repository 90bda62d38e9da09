#include "qlint/truth_table.hpp"

#include <bit>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace qlint {

TruthTable make_table(int n) {
  if (n < 1 || n > kMaxVars) {
    throw std::invalid_argument("variable count must be in [1, 24], got " +
                                std::to_string(n));
  }
  TruthTable f;
  f.n = n;
  f.bits.assign(std::size_t{1} << n, 0);
  return f;
}

TruthTable make_linear(int n, std::uint32_t omega) {
  return make_affine(n, omega, 0);
}

TruthTable make_affine(int n, std::uint32_t omega, int a0) {
  TruthTable f = make_table(n);
  if (omega >= f.size()) {
    throw std::invalid_argument("omega out of range");
  }
  if (a0 != 0 && a0 != 1) {
    throw std::invalid_argument("a0 must be 0 or 1");
  }
  for (std::uint32_t x = 0; x < f.size(); ++x) {
    f.bits[x] = static_cast<std::uint8_t>((std::popcount(x & omega) + a0) & 1);
  }
  return f;
}

TruthTable make_bent(int n) {
  if (n < 2 || n % 2 != 0) {
    throw std::invalid_argument("bent construction needs even n >= 2");
  }
  TruthTable f = make_table(n);
  for (std::uint32_t x = 0; x < f.size(); ++x) {
    // x1 x2 + x3 x4 + ...: AND adjacent bit pairs.
    std::uint32_t prod = x & (x >> 1) & 0x55555555u;
    f.bits[x] = static_cast<std::uint8_t>(std::popcount(prod) & 1);
  }
  return f;
}

TruthTable random_function(int n, std::mt19937_64& rng) {
  TruthTable f = make_table(n);
  std::uint64_t word = 0;
  for (std::size_t x = 0; x < f.size(); ++x) {
    if (x % 64 == 0) word = rng();
    f.bits[x] = static_cast<std::uint8_t>((word >> (x % 64)) & 1);
  }
  return f;
}

TruthTable plant_distance(int n, std::uint32_t omega, int a0, std::uint32_t k,
                          std::mt19937_64& rng) {
  TruthTable f = make_affine(n, omega, a0);
  // nl = k is guaranteed while every other affine function stays at
  // distance >= 2^{n-1} - k >= k, i.e. for k <= 2^{n-2}.
  if (n >= 2 && k > (f.size() >> 2)) {
    throw std::invalid_argument("planted distance must not exceed 2^{n-2}");
  }
  // Partial Fisher-Yates over the index range picks k distinct entries.
  std::vector<std::uint32_t> idx(f.size());
  for (std::uint32_t i = 0; i < f.size(); ++i) idx[i] = i;
  for (std::uint32_t i = 0; i < k; ++i) {
    std::uniform_int_distribution<std::uint32_t> pick(i, static_cast<std::uint32_t>(f.size()) - 1);
    std::swap(idx[i], idx[pick(rng)]);
    f.bits[idx[i]] ^= 1;
  }
  return f;
}

int hamming_distance(const TruthTable& f, const TruthTable& g) {
  if (f.n != g.n) {
    throw std::invalid_argument("hamming_distance needs equal variable counts");
  }
  int d = 0;
  for (std::size_t x = 0; x < f.size(); ++x) d += f.bits[x] != g.bits[x];
  return d;
}

int hamming_weight(const TruthTable& f) {
  int w = 0;
  for (std::uint8_t b : f.bits) w += b;
  return w;
}

void save_table(const TruthTable& f, std::ostream& out) {
  out << "n=" << f.n << "\n";
  const std::size_t digits = (f.size() + 3) / 4;
  std::string hex(digits, '0');
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f.bits[i]) {
      std::size_t digit = i / 4;
      // Digit 0 is the rightmost character.
      char& c = hex[digits - 1 - digit];
      int v = (c <= '9') ? c - '0' : c - 'a' + 10;
      v |= 1 << (i % 4);
      c = static_cast<char>(v < 10 ? '0' + v : 'a' + v - 10);
    }
  }
  out << hex << "\n";
}

TruthTable load_table(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line.rfind("n=", 0) != 0) {
    throw std::runtime_error("truth-table file: expected 'n=<int>' on line 1");
  }
  const int n = std::stoi(line.substr(2));
  TruthTable f = make_table(n);
  if (!std::getline(in, line)) {
    throw std::runtime_error("truth-table file: missing hex line");
  }
  const std::size_t digits = (f.size() + 3) / 4;
  if (line.size() != digits) {
    throw std::runtime_error("truth-table file: expected " +
                             std::to_string(digits) + " hex digits, got " +
                             std::to_string(line.size()));
  }
  for (std::size_t i = 0; i < f.size(); ++i) {
    char c = line[digits - 1 - i / 4];
    int v;
    if (c >= '0' && c <= '9') v = c - '0';
    else if (c >= 'a' && c <= 'f') v = c - 'a' + 10;
    else if (c >= 'A' && c <= 'F') v = c - 'A' + 10;
    else throw std::runtime_error("truth-table file: bad hex digit");
    f.bits[i] = static_cast<std::uint8_t>((v >> (i % 4)) & 1);
  }
  return f;
}

TruthTable load_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return load_table(in);
}

void save_table_file(const TruthTable& f, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path);
  save_table(f, out);
}

}  // namespace qlint
