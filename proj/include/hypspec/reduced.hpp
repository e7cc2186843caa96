// Reduced models for the first eigenvalue when a disconnecting geodesic
// pinches: the topological constant C_top, a two-vertex weighted-graph
// model, and the 1D Sturm-Liouville reduction on the collar with endpoint
// masses standing in for the two thick parts.

#pragma once

#include <vector>

namespace hypspec::reduced {

// Genera of the two components obtained by cutting along the disconnecting
// geodesic.
struct SplitTopology {
  int genus_plus;
  int genus_minus;

  int chi_plus() const { return 1 - 2 * genus_plus; }
  int chi_minus() const { return 1 - 2 * genus_minus; }
  int chi_total() const { return chi_plus() + chi_minus(); }
};

// C_top = -chi(M) / (2 pi^2 chi(M^-) chi(M^+)).
double c_top(const SplitTopology& top);

// Two-vertex weighted graph: vertex masses |chi^+-|, edge conductance ell;
// smallest nonzero eigenvalue divided by 2 pi^2.  Equals c_top * ell.
double graph_lambda(const SplitTopology& top, double ell);

// 1D collar reduction.  v is discretised on a uniform s-grid over
// [-X(ell), X(ell)]; stiffness is 2 pi times the 1D Dirichlet form, mass is
// 2 pi rho^2 plus point masses at the endpoints.  Default masses subtract
// the collar's own area from the Gauss-Bonnet area of each side:
//   A^+- = 2 pi |chi^+-| - ell / sinh(ell/2).
struct SLModel {
  double ell;
  double mass_plus;
  double mass_minus;
  int grid;
};

SLModel make_sl_model(const SplitTopology& top, double ell, int grid = 4096);

// Smallest nonzero generalized eigenvalue of the reduction.
double sl_lambda(const SLModel& model);

// Eigenvector of sl_lambda on the grid (for symmetry diagnostics), together
// with the grid coordinates.
struct SLMode {
  double lambda;
  std::vector<double> s;
  std::vector<double> v;
};

SLMode sl_mode(const SLModel& model);

// Sweep table: one row per ell.
struct FRow {
  double ell;
  double sl;
  double sl_over_ell;
  double graph_over_ell;
};

std::vector<FRow> f_of_ell(const SplitTopology& top,
                           const std::vector<double>& ells, int grid = 4096);

}  // namespace hypspec::reduced
