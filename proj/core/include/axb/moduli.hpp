#pragma once

#include <utility>
#include <vector>

#include "axb/representation.hpp"
#include "axb/spectral.hpp"

namespace axb {

/// Resolution of the sups in the mixed modulus. Each letter of a word gets
/// min(max_points, floor(combo_budget^(1/r))) admissible shifts.
struct ModulusOptions {
  int max_points = 32;
  int combo_budget = 1024;
};

/// Lower bound for sup over 0 < t_i <= s of ||prod_i (T_{w_i}(t_i) - I) f||.
double modulus_word(const RepresentationSpace& space, const DirectionWord& word, double s, const Eigen::VectorXcd& f,
                    const ModulusOptions& opt = {});

/// Omega^r(s, f): sum over all words of length r of modulus_word.
double modulus_mixed(const RepresentationSpace& space, int r, double s, const Eigen::VectorXcd& f,
                     const ModulusOptions& opt = {});

struct ModulusProfile {
  int r = 1;
  std::vector<std::pair<double, double>> entries;  ///< (s, Omega), s ascending
};

/// Omega^r on a list of scales. Values are made nondecreasing by taking the
/// running maximum, which stays a valid lower bound because every admissible
/// shift for a smaller s is admissible for a larger one.
ModulusProfile modulus_profile(const RepresentationSpace& space, int r, std::vector<double> s_list,
                               const Eigen::VectorXcd& f, const ModulusOptions& opt = {});

struct InequalityReport {
  int r = 1;
  int k = 1;
  double a = 2.0;
  std::vector<double> s;
  std::vector<double> ratio0;  ///< Omega^r(s,f) / (s^k sum_{|w|=k} Omega^{r-k}(s, A_w f))
  std::vector<double> ratio1;  ///< Omega^r(a s, f) / Omega^r(s, f)
  std::vector<double> ratio2;  ///< s^k Omega^r(s,f) / (s^{r+k} ||f|| + Omega^{r+k}(s,f))
  double c0 = 0.0, c1 = 0.0, c2 = 0.0;
};

InequalityReport verify_modulus_inequalities(const RepresentationSpace& space, int r, int k, const Eigen::VectorXcd& f,
                                             const std::vector<double>& s_list, double a = 2.0,
                                             const ModulusOptions& opt = {});

/// Upper bound for the K-functional K(s^r, f; E, E^r) from explicit splittings.
struct KUpper {
  double value = 0.0;
  double hs_residual = 0.0;  ///< ||f - H_r(s) f||
  double hs_smooth = 0.0;    ///< s^r ||H_r(s) f||_{E^r}
  double trivial = 0.0;      ///< ||f|| (split f = f + 0)
  double sobolev = 0.0;      ///< s^r ||f||_{E^r} (split f = 0 + f)
};

KUpper k_upper_detail(const RepresentationSpace& space, int r, double s, const Eigen::VectorXcd& f);
double k_upper(const RepresentationSpace& space, int r, double s, const Eigen::VectorXcd& f);
double k_lower(const RepresentationSpace& space, int r, double s, const Eigen::VectorXcd& f,
               const ModulusOptions& opt = {});

/// (sum_k min(1, s^r lambda_k^{r/2})^2 w_k)^{1/2}.
double k_spectral(const SpectralMeasure& m, int r, double s);

/// max(den, 1e-14 * scale), the floor used by all empirical ratios.
double floored(double den, double scale);

}  // namespace axb
