// Collar-local arithmetic for quadratic differentials: closed-form norms of
// dz^2 on a collar, Fourier decomposition of sampled fields on collar
// circles, and principal-part bookkeeping.

#pragma once

#include <complex>
#include <map>
#include <vector>

namespace hypspec::qdiff {

// Norms of dz^2 over the full collar around a geodesic of length ell, with
// respect to the hyperbolic metric rho^2 (ds^2 + dtheta^2):
//   L1        = 8 pi X(ell)
//   Linf      = 8 pi^2 / ell^2
//   L2squared = 8 pi (2 pi / ell)^3 (T + sin T cos T),
//               T = pi/2 - arctan(sinh(ell/2)).
struct CollarNorms {
  double l1;
  double l2_squared;
  double linf;
};

CollarNorms dz2_norms(double ell);

// Fourier data of a field on the circle {s} x S^1, written as
// f(theta) = sum_n b_n e^{n (s + i theta)}.  coefficients maps n -> b_n.
struct FourierSlice {
  double s = 0.0;
  std::map<int, std::complex<double>> coefficients;
};

// Discrete Fourier analysis of uniform theta samples at a fixed s.
// Requires samples.size() >= 2 * max_n + 2.
FourierSlice fourier_slice(const std::vector<std::complex<double>>& samples,
                           double s, int max_n);

// Collar contribution of the squared L2 norm of the dual element whose
// principal part is b_0 = -ell/pi^2:  (ell/pi^2)^2 * ||dz^2||_{L2}^2.
// Approximately 32 pi / ell for small ell.
double principal_theta_norm_sq(double ell);

// Per-mode amplitude curves |b_n e^{n s}| over a family of slices from a
// common collar, for decay-rate inspection.
struct DecayProfile {
  std::vector<double> s;
  std::map<int, std::vector<double>> amplitude;  // n != 0 only
};

DecayProfile collar_decay_profile(const std::vector<FourierSlice>& slices);

}  // namespace hypspec::qdiff
