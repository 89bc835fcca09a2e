#include "axb/besov.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "axb/errors.hpp"

namespace axb {

void validate(const BesovParams& p) {
  if (!(p.alpha > 0.0)) throw DomainError("Besov smoothness alpha must be positive");
  if (!(p.q >= 1.0)) throw DomainError("Besov exponent q must lie in [1, inf]");
  if (!(p.alpha < p.r)) throw DomainError("Besov order r must exceed alpha");
}

std::vector<double> dyadic_scales(int j_min, int j_max) {
  std::vector<double> s;
  for (int j = j_max; j >= j_min; --j) s.push_back(std::ldexp(1.0, -j));
  return s;
}

double weighted_scale_sum(const std::vector<std::pair<double, double>>& core, double alpha, double q) {
  double acc = 0.0;
  for (const auto& [s, v] : core) {
    const double term = std::pow(s, -alpha) * v;
    acc = std::isinf(q) ? std::max(acc, term) : acc + std::pow(term, q) * std::numbers::ln2;
  }
  return std::isinf(q) ? acc : std::pow(acc, 1.0 / q);
}

namespace {

struct Tails {
  double large = 0.0;
  double small = 0.0;
};

// Large-s tail from core <= bound; small-s tail from the local power law of the two smallest samples.
Tails tail_terms(const std::vector<std::pair<double, double>>& core, double alpha, double q, double bound) {
  Tails t;
  if (core.size() < 2) return t;
  const double s_hi = core.back().first;
  t.large = std::isinf(q) ? bound * std::pow(s_hi, -alpha) : std::pow(std::pow(bound, q) * std::pow(s_hi, -alpha * q) / (alpha * q), 1.0 / q);
  const auto [s0, v0] = core[0];
  const auto [s1, v1] = core[1];
  if (v0 <= 0.0 || v1 <= 0.0) return t;
  const double rho = std::log(v1 / v0) / std::log(s1 / s0);
  const double head = std::pow(s0, -alpha) * v0;
  if (rho <= alpha) {
    t.small = kInf;
  } else {
    t.small = std::isinf(q) ? head : head * std::pow(1.0 / (q * (rho - alpha)), 1.0 / q);
  }
  return t;
}

}  // namespace

BesovDetail besov_detail(const RepresentationSpace& space, const Eigen::VectorXcd& f, const BesovParams& p,
                         BesovMethod method, const ModulusOptions& opt) {
  validate(p);
  BesovDetail d;
  const double fn = space.norm(f);
  const auto scales = dyadic_scales();
  if (method == BesovMethod::modulus) {
    d.profile = modulus_profile(space, p.r, scales, f, opt).entries;
  } else {
    for (double s : scales) d.profile.emplace_back(s, k_upper(space, p.r, s, f));
  }
  d.seminorm = weighted_scale_sum(d.profile, p.alpha, p.q);
  d.norm = fn + d.seminorm;
  const double bound = method == BesovMethod::modulus ? std::pow(4.0, p.r) * fn : fn;
  const Tails t = tail_terms(d.profile, p.alpha, p.q, bound);
  d.tail_large = t.large;
  d.tail_small_estimate = t.small;
  return d;
}

double besov_norm(const RepresentationSpace& space, const Eigen::VectorXcd& f, const BesovParams& p, BesovMethod method,
                  const ModulusOptions& opt) {
  return besov_detail(space, f, p, method, opt).norm;
}

namespace {

Eigen::VectorXcd apply_word(const RepresentationSpace& space, const DirectionWord& w, Eigen::VectorXcd g) {
  for (auto it = w.rbegin(); it != w.rend(); ++it) g = space.generator(*it, g);
  return g;
}

// sum over |w| = m of the weighted integral of Omega^order(s, A_w f) with weight s^{-beta}.
double derivative_integrals(const RepresentationSpace& space, const Eigen::VectorXcd& f, int m, int order, double beta,
                            double q, const ModulusOptions& opt) {
  const auto scales = dyadic_scales();
  double acc = 0.0;
  for (const auto& w : all_words(m)) {
    const Eigen::VectorXcd g = apply_word(space, w, f);
    acc += weighted_scale_sum(modulus_profile(space, order, scales, g, opt).entries, beta, q);
  }
  return acc;
}

}  // namespace

double besov_norm_fractional(const RepresentationSpace& space, const Eigen::VectorXcd& f, double alpha, double q,
                             const ModulusOptions& opt) {
  if (!(alpha > 0.0) || alpha == std::floor(alpha)) throw DomainError("fractional Besov norm needs non-integer alpha > 0");
  if (!(q >= 1.0)) throw DomainError("Besov exponent q must lie in [1, inf]");
  const int m = static_cast<int>(std::floor(alpha));
  return sobolev_norm(space, f, m) + derivative_integrals(space, f, m, 1, alpha - m, q, opt);
}

double zygmund_norm(const RepresentationSpace& space, const Eigen::VectorXcd& f, int k, double q,
                    const ModulusOptions& opt) {
  if (k < 1) throw DomainError("Zygmund norm needs k >= 1");
  if (!(q >= 1.0)) throw DomainError("Besov exponent q must lie in [1, inf]");
  return sobolev_norm(space, f, k - 1) + derivative_integrals(space, f, k - 1, 2, 1.0, q, opt);
}

ReiterationReport reiteration_check(const RepresentationSpace& space, const Eigen::VectorXcd& f, int k1, int k2, int r,
                                    double alpha, double q, const ModulusOptions& opt) {
  if (!(0 <= k1 && k1 < alpha && alpha < k2 && k2 <= r)) {
    throw DomainError("reiteration needs 0 <= k1 < alpha < k2 <= r");
  }
  ReiterationReport rep;
  rep.interpolation_norm = sobolev_norm(space, f, k1) + derivative_integrals(space, f, k1, k2 - k1, alpha - k1, q, opt);
  rep.besov_norm = besov_norm(space, f, {alpha, q, r}, BesovMethod::modulus, opt);
  const double lo = std::min(rep.interpolation_norm, rep.besov_norm);
  const double hi = std::max(rep.interpolation_norm, rep.besov_norm);
  rep.ratio = hi / floored(lo, space.norm(f));
  const int k = std::max(k1, 1);
  const double fn = space.norm(f);
  const double num = sobolev_norm(space, f, k);
  const double den = std::pow(fn, 1.0 - static_cast<double>(k) / r) * std::pow(sobolev_norm(space, f, r), static_cast<double>(k) / r);
  rep.gn_constant = num / floored(den, fn);
  return rep;
}

}  // namespace axb
