// P1 finite elements for the Laplace-Beltrami eigenproblem on a chart mesh.
// The stiffness matrix is the plain Euclidean one in each chart (Dirichlet
// energy is conformally invariant in 2D); the mass matrix carries the weight
// rho^2, integrated by the 3-point edge-midpoint rule.

#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "hypspec/surface.hpp"

namespace hypspec::spectrum {

using SparseSymmetric = Eigen::SparseMatrix<double>;

struct AssembledSystem {
  SparseSymmetric stiffness;  // PSD, kernel = constants on closed surfaces
  SparseSymmetric mass;       // PD; sum of all entries = mesh area estimate
};

AssembledSystem assemble(const surface::SurfaceMesh& mesh);

// Sum of all mass entries, i.e. the discrete area.
double total_mass(const SparseSymmetric& mass);

struct EigenResult {
  std::vector<double> values;  // ascending
  Eigen::MatrixXd vectors;     // column j: mass-orthonormal eigenvector j
  std::vector<double> residuals;  // ||K x - lambda M x||_2 per pair
  int iterations = 0;
};

struct SolveOptions {
  int k = 6;
  double tol = 1e-9;
  int max_iter = 400;
  std::uint64_t seed = 42;
  // rough first-eigenvalue scale used to place the shift; <= 0 means use the
  // trace-ratio fallback
  double shift_hint = 0.0;
};

// Lowest k generalized eigenpairs of (K, M) by shift-invert subspace
// iteration with a sparse LDLT factorization of K + sigma M.  Deterministic
// for fixed inputs and seed.  Throws on factorization failure or
// non-convergence (message carries the achieved residuals).
EigenResult solve_lowest(const AssembledSystem& sys, const SolveOptions& opts);

// Restriction of the system to non-boundary unknowns (homogeneous Dirichlet
// conditions).  kept[j] is the original dof of reduced unknown j.
struct DirichletSystem {
  AssembledSystem sys;
  std::vector<int> kept;
};

DirichletSystem restrict_dirichlet(const AssembledSystem& sys,
                                   const std::vector<int>& boundary_dofs);

// Dirichlet spectrum of the truncated collar |s| <= s_max by separation of
// variables: for each Fourier mode n in [0, modes] solves the 1D pencil
// -v'' + n^2 v = lambda rho^2 v with Dirichlet ends on `grid` intervals
// (symmetric tridiagonal, bisection).  Modes n >= 1 are recorded twice.
// per_mode eigenvalues are kept per mode before the merged sort.
// constant_rho freezes rho at its s=0 value (classical-string harness).
std::vector<double> oracle_cylinder(double ell, double s_max, int modes,
                                    int grid, int per_mode = 8,
                                    bool constant_rho = false);

struct AngularEnergyProfile {
  std::vector<double> s;
  std::vector<double> theta_energy;  // integral of |u_theta|^2 over the circle
};

// Per-circle angular energy of a nodal field restricted to the collar chart
// of the given curve.  dof_values has one entry per mesh dof.
AngularEnergyProfile angular_energy_field(const surface::SurfaceMesh& mesh,
                                          int curve,
                                          const std::vector<double>& dof_values);

AngularEnergyProfile angular_energy(const EigenResult& result,
                                    const surface::SurfaceMesh& mesh, int curve,
                                    int which);

// Dirichlet energy of eigenfunction `which` over triangles lying in the
// delta-thick part.  The injectivity proxy is pi*rho on collar charts;
// hexagon (and flat) chart triangles always count as thick.
double thick_energy(const EigenResult& result, const surface::SurfaceMesh& mesh,
                    double delta, int which);

}  // namespace hypspec::spectrum
