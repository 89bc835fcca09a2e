#pragma once

#include <limits>
#include <utility>
#include <vector>

#include "axb/moduli.hpp"

namespace axb {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Smoothness alpha, integrability q in [1, inf] and modulus order r > alpha.
struct BesovParams {
  double alpha = 0.5;
  double q = 2.0;
  int r = 1;
};

void validate(const BesovParams& p);

enum class BesovMethod { k, modulus };

/// Dyadic scales s_j = 2^{-j}, j = j_min..j_max (default -4..16), ascending in s.
std::vector<double> dyadic_scales(int j_min = -4, int j_max = 16);

/// Discretised (sum_j (s_j^{-alpha} core_j)^q ln 2)^{1/q}, sup for q = inf.
double weighted_scale_sum(const std::vector<std::pair<double, double>>& core, double alpha, double q);

struct BesovDetail {
  double norm = 0.0;
  double seminorm = 0.0;
  double tail_large = 0.0;           ///< bound for s beyond the largest sample
  double tail_small_estimate = 0.0;  ///< power-law extrapolation below the smallest sample
  std::vector<std::pair<double, double>> profile;
};

BesovDetail besov_detail(const RepresentationSpace& space, const Eigen::VectorXcd& f, const BesovParams& p,
                         BesovMethod method, const ModulusOptions& opt = {});
double besov_norm(const RepresentationSpace& space, const Eigen::VectorXcd& f, const BesovParams& p, BesovMethod method,
                  const ModulusOptions& opt = {});

/// ||f||_{E^m} + sum_{|w|=m} (int (s^{m-alpha} Omega^1(s, A_w f))^q ds/s)^{1/q}, m = floor(alpha).
double besov_norm_fractional(const RepresentationSpace& space, const Eigen::VectorXcd& f, double alpha, double q,
                             const ModulusOptions& opt = {});

/// ||f||_{E^{k-1}} + sum_{|w|=k-1} (int (s^{-1} Omega^2(s, A_w f))^q ds/s)^{1/q}.
double zygmund_norm(const RepresentationSpace& space, const Eigen::VectorXcd& f, int k, double q,
                    const ModulusOptions& opt = {});

struct ReiterationReport {
  double interpolation_norm = 0.0;  ///< (E^{k1}, E^{k2}) realised through moduli of A_w f, |w| = k1
  double besov_norm = 0.0;          ///< modulus Besov norm of order alpha with r
  double ratio = 0.0;               ///< max / min of the two
  double gn_constant = 0.0;         ///< ||f||_{E^k} / (||f||^{1-k/r} ||f||_{E^r}^{k/r}) at k = k1 (or 1 if k1 = 0)
};

ReiterationReport reiteration_check(const RepresentationSpace& space, const Eigen::VectorXcd& f, int k1, int k2, int r,
                                    double alpha, double q, const ModulusOptions& opt = {});

}  // namespace axb
