#include "qlint/walsh.hpp"

#include <cmath>
#include <cstdlib>
#include <ostream>
#include <stdexcept>

namespace qlint {

WalshSpectrum walsh_transform(const TruthTable& f) {
  WalshSpectrum s;
  s.n = f.n;
  s.values.resize(static_cast<Eigen::Index>(f.size()));
  for (std::size_t x = 0; x < f.size(); ++x) {
    s.values(static_cast<Eigen::Index>(x)) = f.bits[x] ? -1 : 1;
  }
  hadamard_butterfly(s.values);
  return s;
}

double normalized_value(const WalshSpectrum& spectrum, std::uint32_t omega) {
  if (omega >= static_cast<std::uint64_t>(spectrum.values.size())) {
    throw std::out_of_range("omega out of range");
  }
  return static_cast<double>(spectrum.values(omega)) /
         static_cast<double>(std::uint64_t{1} << spectrum.n);
}

double normalized_walsh(const TruthTable& f, std::uint32_t omega) {
  return normalized_value(walsh_transform(f), omega);
}

int nonlinearity(const WalshSpectrum& spectrum) {
  const std::int64_t peak = spectrum.values.cwiseAbs().maxCoeff();
  return static_cast<int>((std::int64_t{1} << (spectrum.n - 1)) - peak / 2);
}

int nonlinearity(const TruthTable& f) { return nonlinearity(walsh_transform(f)); }

bool epsilon_far_from_affine(const TruthTable& f, double eps) {
  if (!(eps > 0.0 && eps < 0.5)) {
    throw std::invalid_argument("epsilon must satisfy 0 < eps < 1/2");
  }
  const auto threshold =
      static_cast<std::int64_t>(std::ceil(eps * static_cast<double>(f.size())));
  return nonlinearity(f) >= threshold;
}

void write_spectrum_csv(const WalshSpectrum& spectrum, std::ostream& out) {
  out << "omega,walsh,normalized\n";
  char buf[64];
  for (Eigen::Index w = 0; w < spectrum.values.size(); ++w) {
    std::snprintf(buf, sizeof buf, "%.10g",
                  normalized_value(spectrum, static_cast<std::uint32_t>(w)));
    out << w << ',' << spectrum.values(w) << ',' << buf << '\n';
  }
}

}  // namespace qlint
