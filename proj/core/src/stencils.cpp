#include "axb/stencils.hpp"

#include <cmath>
#include <numbers>

#include "axb/errors.hpp"

namespace axb {

std::vector<std::vector<double>> fd_weights(double z, const std::vector<double>& nodes, int max_deriv) {
  const int n = static_cast<int>(nodes.size());
  const int m = max_deriv;
  std::vector<std::vector<double>> c(m + 1, std::vector<double>(n, 0.0));
  double c1 = 1.0;
  double c4 = nodes[0] - z;
  c[0][0] = 1.0;
  for (int i = 1; i < n; ++i) {
    const int mn = std::min(i, m);
    double c2 = 1.0;
    const double c5 = c4;
    c4 = nodes[i] - z;
    for (int j = 0; j < i; ++j) {
      const double c3 = nodes[i] - nodes[j];
      c2 *= c3;
      if (j == i - 1) {
        for (int k = mn; k >= 1; --k) c[k][i] = c1 * (k * c[k - 1][i - 1] - c5 * c[k][i - 1]) / c2;
        c[0][i] = -c1 * c5 * c[0][i - 1] / c2;
      }
      for (int k = mn; k >= 1; --k) c[k][j] = (c4 * c[k][j] - k * c[k - 1][j]) / c3;
      c[0][j] = c4 * c[0][j] / c3;
    }
    c1 = c2;
  }
  return c;
}

CentralStencil central_stencil(int deriv, int order) {
  if (deriv < 1 || order < 2 || order % 2 != 0) {
    throw DomainError("central stencil needs deriv >= 1 and an even order >= 2");
  }
  const int w = (order + deriv - 1) / 2;
  std::vector<double> nodes;
  for (int k = -w; k <= w; ++k) nodes.push_back(k);
  auto c = fd_weights(0.0, nodes, deriv);
  CentralStencil s;
  s.deriv = deriv;
  s.order = order;
  s.coeffs = c[deriv];
  // Enforce exact (anti)symmetry so discrete operators keep their structure.
  const double sign = deriv % 2 == 0 ? 1.0 : -1.0;
  for (int k = 1; k <= w; ++k) {
    const double avg = 0.5 * (s.coeffs[w + k] + sign * s.coeffs[w - k]);
    s.coeffs[w + k] = avg;
    s.coeffs[w - k] = sign * avg;
  }
  if (deriv % 2 == 1) s.coeffs[w] = 0.0;
  return s;
}

std::vector<double> lagrange_weights(double theta, int npts) {
  std::vector<double> w(npts);
  const int lo = -npts / 2 + 1;
  for (int p = 0; p < npts; ++p) {
    double num = 1.0;
    double den = 1.0;
    const double xp = lo + p;
    for (int q = 0; q < npts; ++q) {
      if (q == p) continue;
      const double xq = lo + q;
      num *= theta - xq;
      den *= xp - xq;
    }
    w[p] = num / den;
  }
  return w;
}

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
  nodes.assign(n, 0.0);
  weights.assign(n, 0.0);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    nodes[i] = -x;
    nodes[n - 1 - i] = x;
    weights[i] = weights[n - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
}

}  // namespace axb
