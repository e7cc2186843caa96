// Symmetric tridiagonal eigenvalue extraction by Sturm-sequence bisection.
// Used by the 1D reduced models and the cylinder oracle, which only need a
// handful of the lowest eigenvalues of large tridiagonal pencils.

#pragma once

#include <vector>

namespace hypspec::tridiag {

// Number of eigenvalues of the symmetric tridiagonal matrix (diag, sub)
// strictly below x.
int count_below(const std::vector<double>& diag, const std::vector<double>& sub,
                double x);

// The k algebraically smallest eigenvalues, ascending, each located to
// absolute tolerance tol (relative to the Gershgorin radius when tol <= 0).
std::vector<double> smallest_eigenvalues(const std::vector<double>& diag,
                                         const std::vector<double>& sub,
                                         int k, double tol = 0.0);

}  // namespace hypspec::tridiag
