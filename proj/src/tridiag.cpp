#include "hypspec/tridiag.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace hypspec::tridiag {

int count_below(const std::vector<double>& diag, const std::vector<double>& sub,
                double x) {
  const int n = static_cast<int>(diag.size());
  int count = 0;
  double q = 1.0;
  const double tiny = std::numeric_limits<double>::min() / 1e-20;
  for (int i = 0; i < n; ++i) {
    const double off = (i == 0) ? 0.0 : sub[i - 1];
    q = diag[i] - x - (i == 0 ? 0.0 : off * off / q);
    if (q == 0.0) q = tiny;
    if (q < 0.0) ++count;
  }
  return count;
}

std::vector<double> smallest_eigenvalues(const std::vector<double>& diag,
                                         const std::vector<double>& sub,
                                         int k, double tol) {
  const int n = static_cast<int>(diag.size());
  if (k < 1 || k > n) throw std::invalid_argument("tridiag: bad eigenvalue count");
  if (sub.size() + 1 != diag.size())
    throw std::invalid_argument("tridiag: size mismatch");
  // Gershgorin bounds
  double lo = diag[0], hi = diag[0];
  for (int i = 0; i < n; ++i) {
    const double r = (i > 0 ? std::abs(sub[i - 1]) : 0.0) +
                     (i + 1 < n ? std::abs(sub[i]) : 0.0);
    lo = std::min(lo, diag[i] - r);
    hi = std::max(hi, diag[i] + r);
  }
  if (tol <= 0.0) tol = (hi - lo) * 1e-14;

  std::vector<double> out(k);
  for (int j = 0; j < k; ++j) {
    double a = lo, b = hi;
    while (b - a > tol + 1e-300) {
      const double m = 0.5 * (a + b);
      if (m <= a || m >= b) break;  // hit floating-point resolution
      if (count_below(diag, sub, m) >= j + 1)
        b = m;
      else
        a = m;
    }
    out[j] = 0.5 * (a + b);
  }
  return out;
}

}  // namespace hypspec::tridiag
