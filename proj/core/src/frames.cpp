#include "axb/frames.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>

#include "axb/besov.hpp"
#include "axb/errors.hpp"
#include "axb/halfline.hpp"
#include "axb/moduli.hpp"
#include "axb/paley_wiener.hpp"

namespace axb {

namespace {

double phi(double t) { return t > 0.0 ? std::exp(-1.0 / t) : 0.0; }

double sum_q(const std::vector<double>& terms, double q) {
  double acc = 0.0;
  for (double t : terms) acc = std::isinf(q) ? std::max(acc, t) : acc + std::pow(t, q);
  return std::isinf(q) ? acc : std::pow(acc, 1.0 / q);
}

void check_alpha_q(double alpha, double q) {
  if (!(alpha > 0.0)) throw DomainError("Besov smoothness alpha must be positive");
  if (!(q >= 1.0)) throw DomainError("Besov exponent q must lie in [1, inf]");
}

}  // namespace

double partition_g(double x) {
  if (x <= 1.0) return 1.0;
  if (x >= 2.0) return 0.0;
  const double a = phi(2.0 - x);
  return a / (a + phi(x - 1.0));
}

double partition_h(double x) { return partition_g(x) - partition_g(2.0 * x); }

DyadicPartition::DyadicPartition(int j_max) : j_max_(j_max) {
  if (j_max < 0) throw DomainError("partition index J must be >= 0");
}

double DyadicPartition::q(int j, double x) const {
  if (x < 0.0) throw DomainError("partition argument must be nonnegative");
  return j == 0 ? partition_g(x) : partition_h(std::ldexp(x, -j));
}

double DyadicPartition::f(int j, double x) const { return std::sqrt(std::max(q(j, x), 0.0)); }

std::vector<double> DyadicPartition::values(double x) const {
  std::vector<double> v(j_max_ + 1);
  for (int j = 0; j <= j_max_; ++j) v[j] = q(j, x);
  return v;
}

double DyadicPartition::partial_sum(double x) const {
  double acc = 0.0;
  for (int j = 0; j <= j_max_; ++j) acc += q(j, x);
  return acc;
}

std::pair<double, double> band_support(int j) {
  if (j == 0) return {0.0, 2.0};
  return {std::ldexp(1.0, j - 1), std::ldexp(1.0, j + 1)};
}

double axis_value(BandAxis axis, double lambda) {
  const double l = std::max(lambda, 0.0);
  return axis == BandAxis::lambda ? l : std::sqrt(l);
}

int covering_index(const DiscreteOperator& op, BandAxis axis) {
  const double top = axis_value(axis, op.eigenvalues().maxCoeff());
  int j = 0;
  while (std::ldexp(1.0, j) < top) ++j;
  return j;
}

LpDecomposition lp_decompose(const HalfLineFunction& f, int j_max, const DiscreteOperator& op, BandAxis axis) {
  const DyadicPartition part(j_max);
  const Eigen::VectorXcd c = op.coefficients(f);
  const auto& lam = op.eigenvalues();
  LpDecomposition d;
  d.axis = axis;
  double tail = 0.0, total = 0.0;
  const double top = std::ldexp(1.0, j_max);
  for (int k = 0; k < c.size(); ++k) {
    const double w = std::norm(c(k));
    total += w;
    if (axis_value(axis, lam(k)) > top) tail += w;
  }
  d.tail_fraction = total > 0.0 ? tail / total : 0.0;
  d.unresolved = d.tail_fraction > 1e-12;
  for (int j = 0; j <= j_max; ++j) {
    Eigen::VectorXcd cj(c.size());
    for (int k = 0; k < c.size(); ++k) cj(k) = part.f(j, axis_value(axis, lam(k))) * c(k);
    d.bands.push_back(op.synthesize(cj));
  }
  return d;
}

HalfLineFunction lp_reconstruct(const HalfLineFunction& f, int j_max, const DiscreteOperator& op, BandAxis axis) {
  const DyadicPartition part(j_max);
  Eigen::VectorXcd c = op.coefficients(f);
  const auto& lam = op.eigenvalues();
  for (int k = 0; k < c.size(); ++k) c(k) *= part.partial_sum(axis_value(axis, lam(k)));
  return op.synthesize(c);
}

std::vector<double> band_norms(const SpectralMeasure& m, int j_max, BandAxis axis) {
  const DyadicPartition part(j_max);
  std::vector<double> out(j_max + 1, 0.0);
  for (int k = 0; k < m.lambda.size(); ++k) {
    const double x = axis_value(axis, m.lambda(k));
    for (int j = 0; j <= j_max; ++j) out[j] += part.q(j, x) * m.weight(k);
  }
  for (double& v : out) v = std::sqrt(v);
  return out;
}

BandFrame build_band_frame(int j, const DiscreteOperator& op, BandAxis axis, FrameKind kind) {
  BandFrame fr;
  fr.j = j;
  fr.axis = axis;
  const auto [lo, hi] = band_support(j);
  const auto& lam = op.eigenvalues();
  for (int k = 0; k < lam.size(); ++k) {
    const double x = axis_value(axis, lam(k));
    if (x >= lo && x < hi) fr.index.push_back(k);
  }
  const int d = static_cast<int>(fr.index.size());
  fr.empty = d == 0;
  if (fr.empty) return fr;
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(d, d);
  if (kind == FrameKind::orthonormal) {
    fr.atoms = id;
  } else {
    fr.atoms.resize(d, 2 * d);
    fr.atoms << id, id;
  }
  const Eigen::MatrixXcd s = fr.atoms * fr.atoms.adjoint();
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(s);
  fr.a = es.eigenvalues().minCoeff();
  fr.b = es.eigenvalues().maxCoeff();
  fr.dual = s.ldlt().solve(fr.atoms);
  return fr;
}

std::vector<BandFrame> build_frames(int j_max, const DiscreteOperator& op, BandAxis axis, FrameKind kind) {
  std::vector<BandFrame> out;
  for (int j = 0; j <= j_max; ++j) out.push_back(build_band_frame(j, op, axis, kind));
  return out;
}

namespace {

Eigen::VectorXcd weighted_band(const Eigen::VectorXcd& c, const BandFrame& fr, const DiscreteOperator& op) {
  const DyadicPartition part(fr.j);
  const auto& lam = op.eigenvalues();
  Eigen::VectorXcd v(fr.index.size());
  for (std::size_t i = 0; i < fr.index.size(); ++i) {
    const int k = fr.index[i];
    v(i) = part.f(fr.j, axis_value(fr.axis, lam(k))) * c(k);
  }
  return v;
}

}  // namespace

std::vector<Eigen::VectorXcd> frame_analysis(const HalfLineFunction& f, const std::vector<BandFrame>& frames,
                                             const DiscreteOperator& op) {
  const Eigen::VectorXcd c = op.coefficients(f);
  std::vector<Eigen::VectorXcd> out;
  for (const auto& fr : frames) {
    out.push_back(fr.empty ? Eigen::VectorXcd() : Eigen::VectorXcd(fr.atoms.adjoint() * weighted_band(c, fr, op)));
  }
  return out;
}

HalfLineFunction frame_synthesis(const std::vector<Eigen::VectorXcd>& coeffs, const std::vector<BandFrame>& frames,
                                 const DiscreteOperator& op) {
  if (coeffs.size() != frames.size()) throw DomainError("coefficient list does not match the frames");
  Eigen::VectorXcd c = Eigen::VectorXcd::Zero(op.size());
  const auto& lam = op.eigenvalues();
  for (std::size_t b = 0; b < frames.size(); ++b) {
    const auto& fr = frames[b];
    if (fr.empty) continue;
    const DyadicPartition part(fr.j);
    const Eigen::VectorXcd v = fr.dual * coeffs[b];
    for (std::size_t i = 0; i < fr.index.size(); ++i) {
      const int k = fr.index[i];
      c(k) += part.f(fr.j, axis_value(fr.axis, lam(k))) * v(i);
    }
  }
  return op.synthesize(c);
}

double band_coefficient_energy(const Eigen::VectorXcd& c, const BandFrame& frame) {
  if (frame.empty) return 0.0;
  Eigen::VectorXcd v(frame.index.size());
  for (std::size_t i = 0; i < frame.index.size(); ++i) v(i) = c(frame.index[i]);
  return (frame.atoms.adjoint() * v).squaredNorm();
}

FrameBounds frame_bounds(const std::vector<BandFrame>& frames, const DiscreteOperator& op) {
  FrameBounds fb;
  fb.a = std::numeric_limits<double>::infinity();
  int j_top = -1;
  for (const auto& fr : frames) {
    j_top = std::max(j_top, fr.j);
    if (fr.empty) continue;
    fb.a = std::min(fb.a, fr.a);
    fb.b = std::max(fb.b, fr.b);
  }
  if (std::isinf(fb.a)) fb.a = 0.0;
  if (j_top < 0) {
    fb.coverage_gap = true;
    return fb;
  }
  const BandAxis axis = frames.front().axis;
  const double top = std::ldexp(1.0, j_top);
  const auto& lam = op.eigenvalues();
  for (int k = 0; k < lam.size(); ++k) {
    if (axis_value(axis, lam(k)) > top) fb.coverage_gap = true;
  }
  return fb;
}

const char* variant_name(BandVariant v) {
  switch (v) {
    case BandVariant::approx: return "approx";
    case BandVariant::projections: return "projections";
    case BandVariant::frames: return "frames";
  }
  return "?";
}

double besov_norm_bands(const HalfLineFunction& f, double alpha, double q, BandVariant variant,
                        const DiscreteOperator& op) {
  check_alpha_q(alpha, q);
  const int jm = covering_index(op, BandAxis::root);
  std::vector<double> terms;
  switch (variant) {
    case BandVariant::approx: {
      const SpectralProfile prof(spectral_measure(f, op));
      for (int j = 0; j <= jm; ++j) terms.push_back(std::pow(2.0, j * alpha) * prof.best_approx(std::ldexp(1.0, j)));
      return prof.norm() + sum_q(terms, q);
    }
    case BandVariant::projections: {
      const auto norms = band_norms(spectral_measure(f, op), jm, BandAxis::root);
      for (int j = 0; j <= jm; ++j) terms.push_back(std::pow(2.0, j * alpha) * norms[j]);
      return sum_q(terms, q);
    }
    case BandVariant::frames: {
      const auto frames = build_frames(jm, op, BandAxis::root);
      const Eigen::VectorXcd c = op.coefficients(f);
      for (int j = 0; j <= jm; ++j) terms.push_back(std::pow(2.0, j * alpha) * std::sqrt(band_coefficient_energy(c, frames[j])));
      return sum_q(terms, q);
    }
  }
  return 0.0;
}

namespace {

double approx_norm_from_profile(const SpectralProfile& prof, double alpha, double q, std::vector<double> scales) {
  std::sort(scales.begin(), scales.end());
  std::vector<double> v;
  for (double t : scales) v.push_back(std::pow(t, alpha) * prof.best_approx(t));
  double semi = 0.0;
  if (std::isinf(q)) {
    for (double x : v) semi = std::max(semi, x);
  } else {
    for (std::size_t i = 1; i < v.size(); ++i) {
      semi += 0.5 * (std::pow(v[i - 1], q) + std::pow(v[i], q)) * std::log(scales[i] / scales[i - 1]);
    }
    semi = std::pow(semi, 1.0 / q);
  }
  return prof.norm() + semi;
}

std::vector<double> bandwidth_scales() {
  std::vector<double> s;
  for (int j = -4; j <= 16; ++j) s.push_back(std::ldexp(1.0, j));
  return s;
}

}  // namespace

double approx_space_norm(const HalfLineFunction& f, double alpha, double q, const std::vector<double>& scales,
                         const DiscreteOperator& op) {
  check_alpha_q(alpha, q);
  for (double t : scales) {
    if (!(t > 0.0)) throw DomainError("approximation scales must be positive");
  }
  return approx_norm_from_profile(SpectralProfile(spectral_measure(f, op)), alpha, q, scales);
}

DirectInverseReport direct_inverse_check(const std::vector<HalfLineFunction>& corpus, double theta, double q, int r,
                                         const DiscreteOperator& op) {
  if (!(theta > 0.0 && theta < 1.0)) throw DomainError("theta must lie in (0, 1)");
  if (r < 1) throw DomainError("order r must be >= 1");
  DirectInverseReport rep;
  rep.theta = theta;
  rep.q = q;
  rep.r = r;
  rep.ratio_min = std::numeric_limits<double>::infinity();
  rep.bernstein_margin = std::numeric_limits<double>::infinity();
  const double alpha = theta * r;
  const auto sigmas = bandwidth_scales();
  for (const auto& f : corpus) {
    const SpectralMeasure m = spectral_measure(f, op);
    const SpectralProfile prof(m);
    const double fn = prof.norm();
    std::vector<std::pair<double, double>> kprof;
    for (double s : dyadic_scales()) kprof.emplace_back(s, k_spectral(m, r, s));
    const double interp = fn + weighted_scale_sum(kprof, alpha, q);
    const double approx = approx_norm_from_profile(prof, alpha, q, sigmas);
    rep.interpolation.push_back(interp);
    rep.approximation.push_back(approx);
    const double ratio = approx / floored(interp, fn);
    rep.ratio_min = std::min(rep.ratio_min, ratio);
    rep.ratio_max = std::max(rep.ratio_max, ratio);
    const double hr = prof.power_norm(r);
    for (double t : sigmas) {
      rep.jackson_constant = std::max(rep.jackson_constant, std::pow(t, r) * prof.best_approx(t) / floored(hr, fn));
    }
    const double band = prof.band();
    if (band > 0.0) rep.bernstein_margin = std::min(rep.bernstein_margin, 1.0 - hr / (std::pow(band, r) * fn));
  }
  if (corpus.empty()) rep.ratio_min = 0.0;
  if (std::isinf(rep.bernstein_margin)) rep.bernstein_margin = 0.0;
  return rep;
}

}  // namespace axb
