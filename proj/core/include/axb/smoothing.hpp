#pragma once

#include <vector>

#include "axb/halfline.hpp"

namespace axb {

/// Order r, scale s and direction j of an averaging operator.
struct SteklovParams {
  int j = 1;
  int r = 1;
  double s = 1.0;
};

/// Density of t_1 + ... + t_r for independent t_i uniform on [0, eta].
double box_spline(int r, double eta, double t);

/// Binomial coefficient C(r, k).
double binomial(int r, int k);

/// Correlation weights of a direction-1 average on the log grid:
/// (P f)_i = sum_m w[m] f_{i + offset + m}. The r-fold box density on [0, r eta]
/// is integrated exactly against the Lagrange interpolant of the samples.
struct ConvolutionWeights {
  int offset = 0;
  std::vector<double> w;
};

ConvolutionWeights direction1_weights(int r, double eta, double h, int interp_points);

Eigen::VectorXcd correlate(const ConvolutionWeights& k, const Eigen::VectorXcd& v);

/// phi(z) = (e^{iz} - 1) / (iz), with phi(0) = 1.
cplx steklov_phi(double z);

/// P_{j,r}(s) f.
HalfLineFunction steklov_avg(const SteklovParams& p, const HalfLineFunction& f, const DiscretizationOptions& opt = {});

/// P_r(s) f = P_{1,r}(s) P_{2,r}(s) f.
HalfLineFunction steklov(int r, double s, const HalfLineFunction& f, const DiscretizationOptions& opt = {});

/// M_{j,r} f = sum_{k=1}^r (-1)^k C(r,k) T_j(k t_sum) f.
HalfLineFunction m_operator(int j, int r, double t_sum, const HalfLineFunction& f, const DiscretizationOptions& opt = {});

/// H_{j,r}(s) f: the r-fold average of M_{j,r} f.
HalfLineFunction hardy_steklov_dir(const SteklovParams& p, const HalfLineFunction& f, const DiscretizationOptions& opt = {});

/// H_r(s) f = H_{1,r}(s) H_{2,r}(s) f.
HalfLineFunction hardy_steklov(int r, double s, const HalfLineFunction& f, const DiscretizationOptions& opt = {});

/// Direction-2 average evaluated by composite Gauss-Legendre quadrature of the
/// box density against e^{itx}; an independent route to the closed form.
HalfLineFunction steklov_dir2_quadrature(int r, double s, const HalfLineFunction& f);

/// Relative X^2 residual of A_2^m T_1(t1) T_2(t2) f - e^{-m t1} T_1(t1) T_2(t2) A_2^m f.
double commutation_check(int m, double t1, double t2, const HalfLineFunction& f, const DiscretizationOptions& opt = {});

}  // namespace axb
