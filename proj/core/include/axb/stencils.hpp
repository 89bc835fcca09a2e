#pragma once

#include <vector>

namespace axb {

/// Finite-difference weights at z for derivatives 0..max_deriv on arbitrary nodes
/// (Fornberg's recursion). Result is indexed [deriv][node].
std::vector<std::vector<double>> fd_weights(double z, const std::vector<double>& nodes, int max_deriv);

/// Centered stencil for the given derivative on unit spacing, accuracy `order`
/// (even). Coefficients run over offsets -w..w with w = half_width().
struct CentralStencil {
  int deriv = 1;
  int order = 8;
  std::vector<double> coeffs;
  int half_width() const { return static_cast<int>(coeffs.size() / 2); }
};

CentralStencil central_stencil(int deriv, int order);

/// Lagrange cardinal weights on the nodes -npts/2+1 .. npts/2 evaluated at theta
/// in [0, 1). npts is even.
std::vector<double> lagrange_weights(double theta, int npts);

/// Gauss-Legendre nodes and weights on [-1, 1].
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

}  // namespace axb
