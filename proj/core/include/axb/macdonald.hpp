#pragma once

#include <Eigen/Dense>

namespace axb {

/// K_{i tau}(x) = int_0^inf exp(-x cosh t) cos(tau t) dt for x > 0.
/// Trapezoid rule on the even extension with step halving; the integrand is
/// truncated where x (cosh t - 1) exceeds 40, which keeps relative accuracy
/// for large x.
double macdonald_kernel(double tau, double x);

/// Row K_{i tau_k}(x) for tau_k = k * dtau, k = 0..m-1, sharing one quadrature
/// in t (validated at tau = 0 and the largest tau).
Eigen::VectorXd macdonald_row(double x, double dtau, int m);

}  // namespace axb
