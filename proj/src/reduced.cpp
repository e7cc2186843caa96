#include "hypspec/reduced.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

#include "hypspec/collar.hpp"
#include "hypspec/tridiag.hpp"

namespace hypspec::reduced {

namespace {

constexpr double kPi = 3.14159265358979323846;

void validate(const SplitTopology& top) {
  if (top.genus_plus < 1 || top.genus_minus < 1)
    throw std::domain_error("reduced: component genera must be >= 1");
}

double rho(double ell, double s) {
  return ell / (2.0 * kPi * std::cos(ell * s / (2.0 * kPi)));
}

// Assemble the tridiagonal pencil of the collar reduction: 1D P1 stiffness
// with free ends, trapezoidal rho^2 mass plus the endpoint masses, both
// scaled by 2 pi.
struct Tridiag {
  Eigen::VectorXd k_diag, k_sub;  // stiffness
  Eigen::VectorXd m_diag;        // (diagonal) mass
  Eigen::VectorXd s;
};

Tridiag assemble(const SLModel& model) {
  if (model.grid < 64) throw std::domain_error("reduced: grid must be >= 64");
  if (!(model.mass_plus > 0.0 && model.mass_minus > 0.0))
    throw std::domain_error("reduced: nonpositive endpoint mass (ell too large for the reduction)");
  const int n = model.grid;
  const double x = collar::half_length(model.ell);
  const double ds = 2.0 * x / (n - 1);

  Tridiag t;
  t.k_diag = Eigen::VectorXd::Zero(n);
  t.k_sub = Eigen::VectorXd::Constant(n - 1, -2.0 * kPi / ds);
  t.m_diag = Eigen::VectorXd::Zero(n);
  t.s.resize(n);
  for (int i = 0; i < n; ++i) {
    t.s[i] = -x + i * ds;
    const double r = rho(model.ell, t.s[i]);
    const double w = (i == 0 || i == n - 1) ? ds / 2.0 : ds;
    t.m_diag[i] = 2.0 * kPi * r * r * w;
    t.k_diag[i] = (i == 0 || i == n - 1) ? 2.0 * kPi / ds : 4.0 * kPi / ds;
  }
  t.m_diag[0] += model.mass_minus;
  t.m_diag[n - 1] += model.mass_plus;
  return t;
}

}  // namespace

double c_top(const SplitTopology& top) {
  validate(top);
  const double chi = top.chi_total();
  return -chi / (2.0 * kPi * kPi * double(top.chi_minus()) * double(top.chi_plus()));
}

double graph_lambda(const SplitTopology& top, double ell) {
  validate(top);
  if (!(ell > 0.0)) throw std::domain_error("reduced: ell must be positive");
  const double mp = std::abs(top.chi_plus());
  const double mm = std::abs(top.chi_minus());
  return ell * (1.0 / mp + 1.0 / mm) / (2.0 * kPi * kPi);
}

SLModel make_sl_model(const SplitTopology& top, double ell, int grid) {
  validate(top);
  if (!(ell > 0.0 && ell < collar::kMaxShortLength))
    throw std::domain_error("reduced: ell must lie in (0, 2 arsinh(1))");
  const double collar_half_area = ell / std::sinh(ell / 2.0);
  SLModel m;
  m.ell = ell;
  m.mass_plus = 2.0 * kPi * std::abs(top.chi_plus()) - collar_half_area;
  m.mass_minus = 2.0 * kPi * std::abs(top.chi_minus()) - collar_half_area;
  m.grid = grid;
  return m;
}

double sl_lambda(const SLModel& model) {
  Tridiag t = assemble(model);
  const int n = model.grid;
  // symmetrize with the diagonal mass: B = M^{-1/2} K M^{-1/2}
  Eigen::VectorXd inv_sqrt_m = t.m_diag.cwiseSqrt().cwiseInverse();
  std::vector<double> diag(n), sub(n - 1);
  for (int i = 0; i < n; ++i)
    diag[i] = t.k_diag[i] * inv_sqrt_m[i] * inv_sqrt_m[i];
  for (int i = 0; i < n - 1; ++i)
    sub[i] = t.k_sub[i] * inv_sqrt_m[i] * inv_sqrt_m[i + 1];
  // eigenvalue 0 is the constant mode; the reduction's lambda is the next one
  return tridiag::smallest_eigenvalues(diag, sub, 2)[1];
}

SLMode sl_mode(const SLModel& model) {
  Tridiag t = assemble(model);
  const int n = model.grid;
  const double lambda = sl_lambda(model);
  // inverse iteration on (K - sigma M) with a slightly shifted sigma
  const double sigma = lambda * (1.0 + 1e-8) + 1e-14;
  Eigen::VectorXd a = t.k_diag - sigma * t.m_diag;
  Eigen::VectorXd v = Eigen::VectorXd::Ones(n);
  for (int i = 0; i < n; ++i) v[i] = (i % 2 == 0) ? 1.0 : -1.0;  // non-constant seed
  for (int it = 0; it < 3; ++it) {
    // Thomas solve (K - sigma M) w = v
    Eigen::VectorXd c(n - 1), d(n);
    double beta = a[0];
    d[0] = v[0] / beta;
    for (int i = 1; i < n; ++i) {
      c[i - 1] = t.k_sub[i - 1] / beta;
      beta = a[i] - t.k_sub[i - 1] * c[i - 1];
      d[i] = (v[i] - t.k_sub[i - 1] * d[i - 1]) / beta;
    }
    for (int i = n - 2; i >= 0; --i) d[i] -= c[i] * d[i + 1];
    // M-orthogonalize against the constant mode and normalize
    const double mass = t.m_diag.sum();
    const double mean = t.m_diag.dot(d) / mass;
    d.array() -= mean;
    v = d / std::sqrt(t.m_diag.dot(d.cwiseAbs2()));
  }
  SLMode mode;
  mode.lambda = lambda;
  mode.s.assign(t.s.data(), t.s.data() + n);
  mode.v.assign(v.data(), v.data() + n);
  return mode;
}

std::vector<FRow> f_of_ell(const SplitTopology& top,
                           const std::vector<double>& ells, int grid) {
  std::vector<FRow> rows;
  rows.reserve(ells.size());
  for (double ell : ells) {
    FRow r;
    r.ell = ell;
    r.sl = sl_lambda(make_sl_model(top, ell, grid));
    r.sl_over_ell = r.sl / ell;
    r.graph_over_ell = graph_lambda(top, ell) / ell;
    rows.push_back(r);
  }
  return rows;
}

}  // namespace hypspec::reduced
