#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include <Eigen/Eigenvalues>

#include "rschur/cscs.hpp"
#include "rschur/errors.hpp"

namespace rschur {

double iteration_matrix_rho(const ToeplitzBands& t, double theta) {
  const std::size_t n = t.n();
  if (n > kDenseRadiusLimit) {
    throw SizeError("iteration_matrix_rho: n = " + std::to_string(n) + " exceeds the dense limit " +
                    std::to_string(kDenseRadiusLimit));
  }
  if (!(theta > 0.0)) throw std::invalid_argument("theta must be positive");

  // Singularity is decided exactly on the cores rather than by a pivot
  // threshold in the dense LU.
  const ToeplitzOperator op(t);
  const Vector zero(n, 0.0);
  xpattern_shifted_solve(op.circulant_part().core(), theta, zero);
  xpattern_shifted_solve(op.skew_part().core(), theta, zero);

  const auto [c, s] = cscs_split(t);
  const Eigen::MatrixXd cm = dense_of(c);
  const Eigen::MatrixXd sm = dense_of(s);
  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(cm.rows(), cm.cols());

  const Eigen::MatrixXd half = (theta * id + cm).partialPivLu().solve(theta * id - sm);
  const Eigen::MatrixXd m = (theta * id + sm).partialPivLu().solve((theta * id - cm) * half);
  const Eigen::EigenSolver<Eigen::MatrixXd> es(m, false);
  return es.eigenvalues().cwiseAbs().maxCoeff();
}

double contraction_factor(const XPattern& core, double theta) {
  const auto a = core.diag();
  const auto b = core.anti();
  double worst = 0.0;
  for (std::size_t j = 0; j < core.n(); ++j) {
    const double num = (theta - a[j]) * (theta - a[j]) + b[j] * b[j];
    const double den = (theta + a[j]) * (theta + a[j]) + b[j] * b[j];
    if (den == 0.0) return std::numeric_limits<double>::infinity();
    worst = std::max(worst, std::sqrt(num / den));
  }
  return worst;
}

ThetaScan theta_scan(const XPattern& circulant_core, const XPattern& skew_core,
                     std::span<const double> grid) {
  if (grid.empty()) throw std::invalid_argument("theta_scan: empty grid");
  ThetaScan out;
  out.grid.assign(grid.begin(), grid.end());
  std::size_t best = 0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double theta = grid[i];
    if (!(theta > 0.0)) {
      throw std::invalid_argument("theta_scan: grid point " + std::to_string(i) + " is not positive");
    }
    out.circulant_factor.push_back(contraction_factor(circulant_core, theta));
    out.skew_factor.push_back(contraction_factor(skew_core, theta));
    out.bound_values.push_back(out.circulant_factor.back() * out.skew_factor.back());
    const double v = out.bound_values.back();
    const double cur = out.bound_values[best];
    if (v < cur || (v == cur && theta < grid[best])) best = i;
  }
  out.theta_best = grid[best];
  return out;
}

ThetaScan theta_scan(const ToeplitzBands& t, std::span<const double> grid) {
  const ToeplitzOperator op(t);
  return theta_scan(op.circulant_part().core(), op.skew_part().core(), grid);
}

}  // namespace rschur
