#include "hypspec/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

#include <Eigen/SparseCholesky>

#include "hypspec/collar.hpp"
#include "hypspec/tridiag.hpp"

namespace hypspec::spectrum {

namespace {

constexpr double kPi = 3.14159265358979323846;

double rho_collar(double ell, double s) {
  return ell / (2.0 * kPi * std::cos(ell * s / (2.0 * kPi)));
}

struct TriGeometry {
  double x[3], y[3];
  double area;  // positive
  double b[3], c[3];  // gradient components: grad phi_i = (b_i, c_i) / (2 A_signed)
  double signed_area;
};

// Chart coordinates of a triangle with the collar theta seam unwrapped.
TriGeometry chart_coords(const surface::SurfaceMesh& mesh,
                         const surface::Triangle& t) {
  TriGeometry g;
  for (int i = 0; i < 3; ++i) {
    g.x[i] = mesh.vertices[t.v[i]].x;
    g.y[i] = mesh.vertices[t.v[i]].y;
  }
  if (mesh.charts[t.chart].kind == surface::ChartRef::kCollar) {
    const double ymax = std::max({g.y[0], g.y[1], g.y[2]});
    const double ymin = std::min({g.y[0], g.y[1], g.y[2]});
    if (ymax - ymin > kPi)
      for (int i = 0; i < 3; ++i)
        if (g.y[i] < kPi) g.y[i] += 2.0 * kPi;
  }
  for (int i = 0; i < 3; ++i) {
    const int j = (i + 1) % 3, k = (i + 2) % 3;
    g.b[i] = g.y[j] - g.y[k];
    g.c[i] = g.x[k] - g.x[j];
  }
  g.signed_area = 0.5 * ((g.x[1] - g.x[0]) * (g.y[2] - g.y[0]) -
                         (g.y[1] - g.y[0]) * (g.x[2] - g.x[0]));
  g.area = std::abs(g.signed_area);
  return g;
}

// Conformal weight rho^2 at the Euclidean midpoint of edge (i, j).
double midpoint_weight(const surface::SurfaceMesh& mesh,
                       const surface::Triangle& t, const TriGeometry& g, int i,
                       int j) {
  const auto& ref = mesh.charts[t.chart];
  switch (ref.kind) {
    case surface::ChartRef::kCollar: {
      const double ell = mesh.collar_charts[ref.index].ell;
      const double r = rho_collar(ell, 0.5 * (g.x[i] + g.x[j]));
      return r * r;
    }
    case surface::ChartRef::kHexagon: {
      const double ym = 0.5 * (g.y[i] + g.y[j]);
      return 1.0 / (ym * ym);
    }
    case surface::ChartRef::kFlat:
      return 1.0;
  }
  return 1.0;
}

void local_matrices(const surface::SurfaceMesh& mesh,
                    const surface::Triangle& t, double K[3][3], double M[3][3]) {
  const TriGeometry g = chart_coords(mesh, t);
  double scale = 0.0;
  for (int i = 0; i < 3; ++i) scale = std::max(scale, g.b[i] * g.b[i] + g.c[i] * g.c[i]);
  if (!(g.area > 1e-14 * scale))
    throw std::runtime_error("spectrum: degenerate (zero-area) triangle in assembly");
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      K[i][j] = (g.b[i] * g.b[j] + g.c[i] * g.c[j]) / (4.0 * g.area);
      M[i][j] = 0.0;
    }
  // edge-midpoint rule: each midpoint carries weight area/3; the two basis
  // functions adjacent to the edge equal 1/2 there
  for (int e = 0; e < 3; ++e) {
    const int i = e, j = (e + 1) % 3;
    const double w = midpoint_weight(mesh, t, g, i, j) * g.area / 12.0;
    M[i][i] += w;
    M[j][j] += w;
    M[i][j] += w;
    M[j][i] += w;
  }
}

}  // namespace

AssembledSystem assemble(const surface::SurfaceMesh& mesh) {
  const int n = mesh.n_dofs;
  std::vector<Eigen::Triplet<double>> tk, tm;
  tk.reserve(mesh.triangles.size() * 9);
  tm.reserve(mesh.triangles.size() * 9);
  double K[3][3], M[3][3];
  for (const auto& t : mesh.triangles) {
    local_matrices(mesh, t, K, M);
    int dof[3];
    for (int i = 0; i < 3; ++i) dof[i] = mesh.vertex_dof[t.v[i]];
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        tk.emplace_back(dof[i], dof[j], K[i][j]);
        tm.emplace_back(dof[i], dof[j], M[i][j]);
      }
  }
  AssembledSystem sys;
  sys.stiffness.resize(n, n);
  sys.mass.resize(n, n);
  sys.stiffness.setFromTriplets(tk.begin(), tk.end());
  sys.mass.setFromTriplets(tm.begin(), tm.end());
  sys.stiffness.makeCompressed();
  sys.mass.makeCompressed();
  return sys;
}

double total_mass(const SparseSymmetric& mass) {
  double s = 0.0;
  for (int k = 0; k < mass.outerSize(); ++k)
    for (SparseSymmetric::InnerIterator it(mass, k); it; ++it) s += it.value();
  return s;
}

EigenResult solve_lowest(const AssembledSystem& sys, const SolveOptions& opts) {
  const auto& K = sys.stiffness;
  const auto& M = sys.mass;
  const int n = static_cast<int>(K.rows());
  if (opts.k < 2) throw std::invalid_argument("spectrum: k must be >= 2");
  if (n < opts.k + 2) throw std::invalid_argument("spectrum: system too small for k");

  double sigma;
  if (opts.shift_hint > 0.0) {
    sigma = 0.1 * opts.shift_hint;
  } else {
    double trk = 0.0, trm = 0.0;
    for (int i = 0; i < n; ++i) {
      trk += K.coeff(i, i);
      trm += M.coeff(i, i);
    }
    sigma = 0.1 * trk / trm;
  }

  SparseSymmetric A = K + sigma * M;
  Eigen::SimplicialLDLT<SparseSymmetric> ldlt(A);
  if (ldlt.info() != Eigen::Success)
    throw std::runtime_error("spectrum: factorization of K + sigma M failed");

  const int m = std::min(n, opts.k + 6);
  std::mt19937_64 rng(opts.seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXd X(n, m);
  for (int j = 0; j < m; ++j)
    for (int i = 0; i < n; ++i) X(i, j) = gauss(rng);
  X.col(0).setOnes();  // seed the constant mode directly

  EigenResult out;
  Eigen::VectorXd ritz(m);
  for (int iter = 1; iter <= opts.max_iter; ++iter) {
    // shift-invert step and M-orthonormalization
    Eigen::MatrixXd Y = ldlt.solve(M * X);
    Eigen::MatrixXd G = Y.transpose() * (M * Y);
    Eigen::LLT<Eigen::MatrixXd> llt(G);
    if (llt.info() != Eigen::Success)
      throw std::runtime_error("spectrum: subspace became rank-deficient");
    Y = llt.matrixL().solve(Y.transpose()).transpose();
    // Rayleigh-Ritz in the M-orthonormal basis
    Eigen::MatrixXd Ar = Y.transpose() * (K * Y).eval();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (Ar + Ar.transpose()));
    X = Y * es.eigenvectors();
    ritz = es.eigenvalues();

    out.iterations = iter;
    out.residuals.assign(opts.k, 0.0);
    bool done = true;
    for (int j = 0; j < opts.k; ++j) {
      const Eigen::VectorXd r = K * X.col(j) - ritz(j) * (M * X.col(j));
      out.residuals[j] = r.norm();
      if (out.residuals[j] > opts.tol) done = false;
    }
    if (done) break;
    if (iter == opts.max_iter) {
      std::ostringstream msg;
      msg << "spectrum: eigensolver did not reach tol " << opts.tol
          << " after " << iter << " iterations; residuals:";
      for (double r : out.residuals) msg << ' ' << r;
      throw std::runtime_error(msg.str());
    }
  }

  out.values.assign(ritz.data(), ritz.data() + opts.k);
  out.vectors = X.leftCols(opts.k);
  return out;
}

DirichletSystem restrict_dirichlet(const AssembledSystem& sys,
                                   const std::vector<int>& boundary_dofs) {
  const int n = static_cast<int>(sys.stiffness.rows());
  std::vector<int> remap(n, -1);
  std::vector<char> is_boundary(n, 0);
  for (int d : boundary_dofs) {
    if (d < 0 || d >= n) throw std::out_of_range("spectrum: boundary dof out of range");
    is_boundary[d] = 1;
  }
  DirichletSystem out;
  for (int i = 0; i < n; ++i)
    if (!is_boundary[i]) {
      remap[i] = static_cast<int>(out.kept.size());
      out.kept.push_back(i);
    }
  const int nk = static_cast<int>(out.kept.size());
  auto restrict_one = [&](const SparseSymmetric& A) {
    std::vector<Eigen::Triplet<double>> trip;
    for (int k = 0; k < A.outerSize(); ++k)
      for (SparseSymmetric::InnerIterator it(A, k); it; ++it)
        if (remap[it.row()] >= 0 && remap[it.col()] >= 0)
          trip.emplace_back(remap[it.row()], remap[it.col()], it.value());
    SparseSymmetric R(nk, nk);
    R.setFromTriplets(trip.begin(), trip.end());
    R.makeCompressed();
    return R;
  };
  out.sys.stiffness = restrict_one(sys.stiffness);
  out.sys.mass = restrict_one(sys.mass);
  return out;
}

std::vector<double> oracle_cylinder(double ell, double s_max, int modes,
                                    int grid, int per_mode, bool constant_rho) {
  if (!(ell > 0.0)) throw std::domain_error("spectrum: ell must be positive");
  if (!(s_max > 0.0 && s_max < collar::half_length(ell)))
    throw std::domain_error("spectrum: s_max must lie in (0, X(ell))");
  if (modes < 0 || grid < 16) throw std::domain_error("spectrum: bad modes/grid");

  const double ds = 2.0 * s_max / grid;
  const int ni = grid - 1;  // interior nodes
  std::vector<double> rho2(ni);
  for (int i = 0; i < ni; ++i) {
    const double s = -s_max + ds * (i + 1);
    const double r = constant_rho ? rho_collar(ell, 0.0) : rho_collar(ell, s);
    rho2[i] = r * r;
  }

  std::vector<double> all;
  for (int nmode = 0; nmode <= modes; ++nmode) {
    // lumped P1 pencil: (second difference + n^2 ds) v = lambda ds rho^2 v,
    // symmetrized by the diagonal mass
    std::vector<double> diag(ni), sub(ni - 1);
    for (int i = 0; i < ni; ++i)
      diag[i] = (2.0 / ds + nmode * nmode * ds) / (ds * rho2[i]);
    for (int i = 0; i + 1 < ni; ++i)
      sub[i] = (-1.0 / ds) / (ds * std::sqrt(rho2[i] * rho2[i + 1]));
    auto vals = tridiag::smallest_eigenvalues(diag, sub, std::min(per_mode, ni));
    for (double v : vals) {
      all.push_back(v);
      if (nmode >= 1) all.push_back(v);  // modes +-n coincide
    }
  }
  std::sort(all.begin(), all.end());
  return all;
}

AngularEnergyProfile angular_energy_field(const surface::SurfaceMesh& mesh,
                                          int curve,
                                          const std::vector<double>& dof_values) {
  const surface::CollarGrid grid = surface::collar_restriction(mesh, curve);
  const int nt = grid.n_theta;
  const double dtheta = 2.0 * kPi / nt;
  AngularEnergyProfile prof;
  prof.s = grid.s;
  prof.theta_energy.resize(grid.s.size());
  for (size_t r = 0; r < grid.s.size(); ++r) {
    double acc = 0.0;
    for (int k = 0; k < nt; ++k) {
      const double u0 = dof_values[mesh.vertex_dof[grid.node(static_cast<int>(r), k)]];
      const double u1 =
          dof_values[mesh.vertex_dof[grid.node(static_cast<int>(r), (k + 1) % nt)]];
      const double du = (u1 - u0) / dtheta;
      acc += du * du * dtheta;
    }
    prof.theta_energy[r] = acc;
  }
  return prof;
}

AngularEnergyProfile angular_energy(const EigenResult& result,
                                    const surface::SurfaceMesh& mesh, int curve,
                                    int which) {
  if (which < 0 || which >= result.vectors.cols())
    throw std::out_of_range("spectrum: eigenfunction index out of range");
  const Eigen::VectorXd col = result.vectors.col(which);
  const std::vector<double> vals(col.data(), col.data() + col.size());
  return angular_energy_field(mesh, curve, vals);
}

double thick_energy(const EigenResult& result, const surface::SurfaceMesh& mesh,
                    double delta, int which) {
  if (which < 0 || which >= result.vectors.cols())
    throw std::out_of_range("spectrum: eigenfunction index out of range");
  const Eigen::VectorXd u = result.vectors.col(which);
  double energy = 0.0;
  double K[3][3], M[3][3];
  for (const auto& t : mesh.triangles) {
    bool thick = true;
    if (mesh.charts[t.chart].kind == surface::ChartRef::kCollar) {
      for (int i = 0; i < 3; ++i)
        if (kPi * mesh.vertices[t.v[i]].rho < delta) thick = false;
    }
    if (!thick) continue;
    local_matrices(mesh, t, K, M);
    double ul[3];
    for (int i = 0; i < 3; ++i) ul[i] = u[mesh.vertex_dof[t.v[i]]];
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) energy += ul[i] * K[i][j] * ul[j];
  }
  return energy;
}

}  // namespace hypspec::spectrum
