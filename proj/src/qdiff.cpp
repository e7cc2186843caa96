#include "hypspec/qdiff.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

#include "hypspec/collar.hpp"

namespace hypspec::qdiff {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

CollarNorms dz2_norms(double ell) {
  if (!(ell > 0.0 && ell <= collar::kMaxShortLength))
    throw std::domain_error("qdiff: ell must lie in (0, 2 arsinh(1))");
  CollarNorms n;
  n.l1 = 8.0 * kPi * collar::half_length(ell);
  n.linf = 8.0 * kPi * kPi / (ell * ell);
  const double t = kPi / 2.0 - std::atan(std::sinh(ell / 2.0));
  const double f = 2.0 * kPi / ell;
  n.l2_squared = 8.0 * kPi * f * f * f * (t + std::sin(t) * std::cos(t));
  return n;
}

FourierSlice fourier_slice(const std::vector<std::complex<double>>& samples,
                           double s, int max_n) {
  const int n_grid = static_cast<int>(samples.size());
  if (n_grid < 2 * max_n + 2)
    throw std::invalid_argument("qdiff: theta grid too small for requested modes");
  FourierSlice slice;
  slice.s = s;
  for (int n = -max_n; n <= max_n; ++n) {
    std::complex<double> acc = 0.0;
    for (int j = 0; j < n_grid; ++j) {
      const double theta = 2.0 * kPi * j / n_grid;
      acc += samples[j] * std::exp(std::complex<double>(0.0, -n * theta));
    }
    slice.coefficients[n] = acc / double(n_grid) * std::exp(-n * s);
  }
  return slice;
}

double principal_theta_norm_sq(double ell) {
  const double b0 = ell / (kPi * kPi);
  return b0 * b0 * dz2_norms(ell).l2_squared;
}

DecayProfile collar_decay_profile(const std::vector<FourierSlice>& slices) {
  DecayProfile p;
  std::set<int> modes;
  for (const auto& sl : slices) {
    p.s.push_back(sl.s);
    for (const auto& [n, b] : sl.coefficients)
      if (n != 0) modes.insert(n);
  }
  for (int n : modes) {
    std::vector<double> curve;
    curve.reserve(slices.size());
    for (const auto& sl : slices) {
      auto it = sl.coefficients.find(n);
      const std::complex<double> b =
          it == sl.coefficients.end() ? std::complex<double>(0.0) : it->second;
      curve.push_back(std::abs(b) * std::exp(n * sl.s));
    }
    p.amplitude[n] = std::move(curve);
  }
  return p;
}

}  // namespace hypspec::qdiff
