// Finite-difference derivatives of the first eigenvalue with respect to
// Fenchel-Nielsen coordinates, and the rate experiments built on them.
// Three interchangeable backends compute lambda_1 of a configuration: the
// 2D FEM solve, the collar Sturm-Liouville model, and the weighted graph
// model (the reduced models depend only on the pinched curve's length).

#pragma once

#include <functional>
#include <vector>

#include "hypspec/reduced.hpp"
#include "hypspec/surface.hpp"

namespace hypspec::fncalculus {

enum class Backend { kFem, kSl, kGraph };
enum class Scheme { kCentral, kRichardson };
enum class CoordKind { kLength, kTwist };

struct BackendSpec {
  Backend backend = Backend::kSl;
  surface::MeshParams mesh;               // fem only
  int sl_grid = 4096;                     // sl only
  int pinch_curve = 0;                    // curve treated as the short one
  reduced::SplitTopology top{1, 1};       // split topology of the pinch curve
  double tol = 1e-9;
  std::uint64_t seed = 42;
};

// lambda_1 of the configuration under the chosen backend.
double lambda1(const surface::FNCoordinates& fn, const BackendSpec& be);

struct DerivativeRequest {
  surface::FNCoordinates base;
  CoordKind kind = CoordKind::kLength;
  int index = 0;
  double step = 0.0;  // <= 0 selects the default max(1e-3, 0.05 * value)
  Scheme scheme = Scheme::kCentral;
  BackendSpec backend;
};

struct Derivative {
  double value = 0.0;
  double error_estimate = 0.0;
};

// Central or Richardson differencing of a scalar function; the testable core
// of fd_derivative.
Derivative fd_of_function(const std::function<double(double)>& f, double x,
                          double h, Scheme scheme);

Derivative fd_derivative(const DerivativeRequest& req);

struct RateRow {
  double ell1 = 0.0;
  double lambda = 0.0;
  double dlam_dell1 = 0.0;
  double r1 = 0.0;             // |dlam/dell1 - lambda/ell1|
  double r1_normalized = 0.0;  // r1 / (ell1 |log ell1|)
  double dlam_dell_other = 0.0;  // fem backend: derivative in one j != 1
  double twist_delta = 0.0;      // fem backend: |lambda shift| per twist quantum
};

struct ExperimentReport {
  std::vector<RateRow> rows;
  double slope_other = 0.0;  // log-log slope of |dlam_dell_other| vs ell1
};

// Sweep ell1 over the given descending list, overwriting the length of
// backend.pinch_curve in the base configuration.  other_index selects the
// j != 1 length probed by the fem backend (ignored otherwise).
ExperimentReport rate_experiment_fn(const surface::FNCoordinates& base,
                                    const std::vector<double>& ell1_list,
                                    const BackendSpec& backend,
                                    int other_index = 1);

struct C0Row {
  double ell1 = 0.0;
  double lambda_a = 0.0;   // other lengths = other_a
  double lambda_b = 0.0;   // other lengths = other_b
  double diff = 0.0;       // |lambda_a - lambda_b|
  double diff_over_sq = 0.0;  // diff / ell1^2
  double reduced_value = 0.0;     // sl model prediction
  double rel_gap_reduced = 0.0;   // |lambda_a - reduced| / lambda_a
};

// Same ell1, different remaining FN coordinates: the C^0 comparison on the
// genus-2 reference family.
std::vector<C0Row> c0_comparison(const std::vector<double>& ell1_list,
                                 double other_a, double other_b,
                                 const BackendSpec& fem_backend);

struct SharpnessRow {
  double ell1 = 0.0;
  double lambda_a = 0.0;  // ell2 = a
  double lambda_b = 0.0;  // ell2 = b
  double difference = 0.0;
  double difference_over_sq = 0.0;
};

// Genus-3 chain with two disconnecting curves; D(ell1) = |lambda(ell2=a) -
// lambda(ell2=b)| probes the second-order dependence on the far coordinate.
std::vector<SharpnessRow> sharpness_experiment(
    const std::vector<double>& ell1_list, double ell2_a, double ell2_b,
    double other_len, const surface::MeshParams& mesh_params);

}  // namespace hypspec::fncalculus
