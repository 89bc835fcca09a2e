#pragma once

#include <vector>

#include "axb/moduli.hpp"
#include "axb/spectral.hpp"

namespace axb {

/// Bound omega > 0 on the spectrum of Delta^{1/2} (the tau axis).
struct BandLimit {
  double omega = 1.0;
  explicit BandLimit(double w);
};

/// Projection onto sqrt(lambda) <= omega.
HalfLineFunction pw_project(const BandLimit& b, const HalfLineFunction& f, const DiscreteOperator& op);
MultiplierResult pw_project(const BandLimit& b, const HalfLineFunction& f, const KernelTable& table);

/// ||f - P_sigma f|| (orthogonal projection attains the infimum).
double best_approx(double sigma, const HalfLineFunction& f, const DiscreteOperator& op);

/// Spectral weights of one function sorted by sqrt(lambda), for fast repeated
/// evaluation of best approximations and spectral norms.
class SpectralProfile {
 public:
  explicit SpectralProfile(const SpectralMeasure& m);
  double norm() const { return std::sqrt(total_); }
  /// sqrt of the weight with sqrt(lambda) > sigma.
  double best_approx(double sigma) const;
  /// ||Delta^{s/2} f||.
  double power_norm(double s) const;
  /// Largest sqrt(lambda) carrying weight above rel_floor * ||f||^2.
  double band(double rel_floor = 1e-24) const;
  const std::vector<double>& roots() const { return roots_; }
  const std::vector<double>& weights() const { return w_; }

 private:
  std::vector<double> roots_;
  std::vector<double> w_;
  std::vector<double> tail_;  // tail_[k] = sum_{i >= k} w_i
  double total_ = 0.0;
};

struct BernsteinReport {
  double ratio = 0.0;   ///< ||Delta^{s/2} f|| / (omega^s ||f||)
  double margin = 0.0;  ///< 1 - ratio
};

BernsteinReport bernstein_check(const HalfLineFunction& f, double omega, double s, const DiscreteOperator& op);

struct RieszBoasResult {
  HalfLineFunction series;
  HalfLineFunction reference;  ///< i Delta^{1/2} f
  double error = 0.0;
  double rel_error = 0.0;
  double tail_bound = 0.0;     ///< (2 omega / pi^2) ||f|| / (K - 1/2)
};

/// Scalar symmetric partial sum for the eigenvalue with sqrt(lambda) = tau.
cplx riesz_boas_scalar(double omega, double tau, int k_trunc);

RieszBoasResult riesz_boas(double omega, const HalfLineFunction& f, int k_trunc, const DiscreteOperator& op);

/// sup over tau in the grid {t i / npts} of ||(e^{i tau Delta} - I)^r f||.
double schrodinger_modulus(int r, double t, const SpectralMeasure& m, int npts = 64);
double schrodinger_modulus(int r, double t, const HalfLineFunction& f, const DiscreteOperator& op, int npts = 64);

struct JacksonRow {
  int function_index = 0;
  double sigma = 0.0;
  double best = 0.0;
  double rhs = 0.0;
  double ratio = 0.0;
};

struct JacksonReport {
  int r = 2;
  double c_hat = 0.0;
  std::vector<JacksonRow> rows;
};

/// C = max E(sigma, f) / (Omega^r(1/sigma, f) + min(sigma^{-r}, 1) ||f||).
JacksonReport jackson_check(const std::vector<double>& sigma_list, int r, const std::vector<HalfLineFunction>& corpus,
                            const DiscreteOperator& op, const RepresentationSpace& space, const ModulusOptions& opt = {});

/// Least-squares log-log slope of E(sigma, f) over [sigma_lo, 10 sigma_lo],
/// restricted to samples above 1e-10 ||f||. Returns NaN with fewer than 3 samples.
double jackson_slope(const SpectralProfile& prof, double sigma_lo = 1.0, int samples = 11);

}  // namespace axb
