#pragma once

#include <vector>

#include "axb/spectral.hpp"

namespace axb {

/// g = 1 on [0, 1], 0 on [2, inf), smooth monotone step built from e^{-1/t}.
double partition_g(double x);
/// h(x) = g(x) - g(2x), supported in [1/2, 2].
double partition_h(double x);

/// Q_0 = g, Q_j(x) = h(2^{-j} x) and F_j = sqrt(Q_j). The argument x is lambda
/// (eigenvalue of Delta) or sqrt(lambda), depending on the BandAxis in use.
class DyadicPartition {
 public:
  explicit DyadicPartition(int j_max);
  int j_max() const { return j_max_; }
  double q(int j, double x) const;
  double f(int j, double x) const;
  /// Q_0(x) .. Q_J(x).
  std::vector<double> values(double x) const;
  /// sum_{j <= J} Q_j(x) evaluated term by term.
  double partial_sum(double x) const;

 private:
  int j_max_;
};

/// Band support [lo, hi) of Q_j on its axis: [0, 2) for j = 0, [2^{j-1}, 2^{j+1}) otherwise.
std::pair<double, double> band_support(int j);

enum class BandAxis { lambda, root };

double axis_value(BandAxis axis, double lambda);

/// Smallest J with 2^J >= the largest value of the axis variable over the spectrum.
int covering_index(const DiscreteOperator& op, BandAxis axis);

struct LpDecomposition {
  BandAxis axis = BandAxis::lambda;
  std::vector<HalfLineFunction> bands;  ///< F_j(Delta) f
  double tail_fraction = 0.0;           ///< energy share with axis value > 2^J
  bool unresolved = false;              ///< tail_fraction above 1e-12
};

LpDecomposition lp_decompose(const HalfLineFunction& f, int j_max, const DiscreteOperator& op,
                             BandAxis axis = BandAxis::lambda);

/// sum_j Q_j(Delta) f.
HalfLineFunction lp_reconstruct(const HalfLineFunction& f, int j_max, const DiscreteOperator& op,
                                BandAxis axis = BandAxis::lambda);

/// ||F_j(Delta) f|| for j = 0..J computed from spectral weights.
std::vector<double> band_norms(const SpectralMeasure& m, int j_max, BandAxis axis);

/// Frame of one band in eigen-coefficient coordinates. Column k of `atoms`
/// holds the coefficients of Phi_k on the eigenvectors listed in `index`.
struct BandFrame {
  int j = 0;
  BandAxis axis = BandAxis::lambda;
  std::vector<int> index;
  Eigen::MatrixXcd atoms;
  Eigen::MatrixXcd dual;
  double a = 0.0;
  double b = 0.0;
  bool empty = true;
};

enum class FrameKind { orthonormal, redundant };

/// Atoms are the eigenvectors with axis value in band_support(j); the redundant
/// kind lists every atom twice. Bounds come from the extremal eigenvalues of the
/// frame operator, the dual from its inverse.
BandFrame build_band_frame(int j, const DiscreteOperator& op, BandAxis axis = BandAxis::lambda,
                           FrameKind kind = FrameKind::orthonormal);

std::vector<BandFrame> build_frames(int j_max, const DiscreteOperator& op, BandAxis axis = BandAxis::lambda,
                                    FrameKind kind = FrameKind::orthonormal);

/// <F_j(Delta) f, Phi^j_k> for every band.
std::vector<Eigen::VectorXcd> frame_analysis(const HalfLineFunction& f, const std::vector<BandFrame>& frames,
                                             const DiscreteOperator& op);

/// sum_{j,k} c^j_k F_j(Delta) Psi^j_k.
HalfLineFunction frame_synthesis(const std::vector<Eigen::VectorXcd>& coeffs, const std::vector<BandFrame>& frames,
                                 const DiscreteOperator& op);

/// sum_k |<f, Phi^j_k>|^2 (no F_j weighting).
double band_coefficient_energy(const Eigen::VectorXcd& c, const BandFrame& frame);

struct FrameBounds {
  double a = 0.0;
  double b = 0.0;
  bool coverage_gap = false;  ///< some eigenvalue lies outside every band
};

/// Global bounds: min and max over bands of the per-band bounds.
FrameBounds frame_bounds(const std::vector<BandFrame>& frames, const DiscreteOperator& op);

enum class BandVariant { approx, projections, frames };

const char* variant_name(BandVariant v);

/// Band-based Besov norms on the sqrt(lambda) axis, j = 0..covering index.
double besov_norm_bands(const HalfLineFunction& f, double alpha, double q, BandVariant variant,
                        const DiscreteOperator& op);

/// ||f|| + (int (t^alpha E(t, f))^q dt/t)^{1/q} by log-trapezoid over the given scales.
double approx_space_norm(const HalfLineFunction& f, double alpha, double q, const std::vector<double>& scales,
                         const DiscreteOperator& op);

struct DirectInverseReport {
  double theta = 0.0;
  double q = 2.0;
  int r = 2;
  std::vector<double> interpolation;  ///< spectral K-functional norm of order theta r
  std::vector<double> approximation;  ///< approximation-space norm of order theta r
  double ratio_min = 0.0;             ///< min approximation / interpolation
  double ratio_max = 0.0;
  double jackson_constant = 0.0;      ///< max t^r E(t, f) / ||Delta^{r/2} f||
  double bernstein_margin = 0.0;      ///< min 1 - ||Delta^{r/2} f|| / (band^r ||f||)
};

DirectInverseReport direct_inverse_check(const std::vector<HalfLineFunction>& corpus, double theta, double q, int r,
                                         const DiscreteOperator& op);

}  // namespace axb
