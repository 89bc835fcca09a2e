#include "axb/paley_wiener.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "axb/errors.hpp"
#include "axb/halfline.hpp"

namespace axb {

BandLimit::BandLimit(double w) : omega(w) {
  if (!(w > 0.0)) throw DomainError("band limit omega must be positive");
}

namespace {

double root(double lam) { return std::sqrt(std::max(lam, 0.0)); }

}  // namespace

HalfLineFunction pw_project(const BandLimit& b, const HalfLineFunction& f, const DiscreteOperator& op) {
  const double w = b.omega;
  return apply_multiplier([w](double lam) { return cplx(root(lam) <= w ? 1.0 : 0.0); }, f, op).value;
}

MultiplierResult pw_project(const BandLimit& b, const HalfLineFunction& f, const KernelTable& table) {
  const double w = b.omega;
  return apply_multiplier([w](double lam) { return cplx(root(lam) <= w ? 1.0 : 0.0); }, f, table);
}

double best_approx(double sigma, const HalfLineFunction& f, const DiscreteOperator& op) {
  return xp_norm(f - pw_project(BandLimit(sigma), f, op));
}

SpectralProfile::SpectralProfile(const SpectralMeasure& m) {
  const int n = static_cast<int>(m.lambda.size());
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return m.lambda(a) < m.lambda(b); });
  roots_.resize(n);
  w_.resize(n);
  for (int i = 0; i < n; ++i) {
    roots_[i] = root(m.lambda(idx[i]));
    w_[i] = m.weight(idx[i]);
  }
  tail_.assign(n + 1, 0.0);
  for (int i = n - 1; i >= 0; --i) tail_[i] = tail_[i + 1] + w_[i];
  total_ = tail_[0];
}

double SpectralProfile::best_approx(double sigma) const {
  const auto it = std::upper_bound(roots_.begin(), roots_.end(), sigma);
  return std::sqrt(tail_[static_cast<std::size_t>(it - roots_.begin())]);
}

double SpectralProfile::power_norm(double s) const {
  double acc = 0.0;
  for (std::size_t i = 0; i < w_.size(); ++i) acc += std::pow(roots_[i], 2.0 * s) * w_[i];
  return std::sqrt(acc);
}

double SpectralProfile::band(double rel_floor) const {
  for (std::size_t i = w_.size(); i-- > 0;) {
    if (w_[i] > rel_floor * total_) return roots_[i];
  }
  return 0.0;
}

BernsteinReport bernstein_check(const HalfLineFunction& f, double omega, double s, const DiscreteOperator& op) {
  const SpectralProfile prof(spectral_measure(f, op));
  BernsteinReport rep;
  const double fn = prof.norm();
  rep.ratio = fn > 0.0 ? prof.power_norm(s) / (std::pow(omega, s) * fn) : 0.0;
  rep.margin = 1.0 - rep.ratio;
  return rep;
}

cplx riesz_boas_scalar(double omega, double tau, int k_trunc) {
  // Terms k and 1 - k pair into 2i sin.
  double acc = 0.0;
  for (int k = k_trunc; k >= 1; --k) {
    const double c = k - 0.5;
    const double sign = (k % 2) ? 1.0 : -1.0;
    acc += sign * std::sin(std::numbers::pi * c * tau / omega) / (c * c);
  }
  return cplx(0.0, 2.0 * omega / (std::numbers::pi * std::numbers::pi) * acc);
}

RieszBoasResult riesz_boas(double omega, const HalfLineFunction& f, int k_trunc, const DiscreteOperator& op) {
  if (k_trunc < 1) throw DomainError("Riesz-Boas truncation must be >= 1");
  if (!(omega > 0.0)) throw DomainError("band limit omega must be positive");
  Eigen::VectorXcd c = op.coefficients(f);
  Eigen::VectorXcd ref = c;
  const auto& lam = op.eigenvalues();
  for (int k = 0; k < c.size(); ++k) {
    const double tau = root(lam(k));
    c(k) *= riesz_boas_scalar(omega, tau, k_trunc);
    ref(k) *= cplx(0.0, tau);
  }
  RieszBoasResult r{op.synthesize(c), op.synthesize(ref), 0.0, 0.0, 0.0};
  r.error = xp_norm(r.series - r.reference);
  const double fn = xp_norm(f);
  r.rel_error = r.error / floored(xp_norm(r.reference), fn);
  r.tail_bound = 2.0 * omega / (std::numbers::pi * std::numbers::pi) * fn / (k_trunc - 0.5);
  return r;
}

double schrodinger_modulus(int r, double t, const SpectralMeasure& m, int npts) {
  if (r < 1) throw DomainError("order r must be >= 1");
  if (t <= 0.0) return 0.0;
  double best = 0.0;
  for (int i = 1; i <= npts; ++i) {
    const double tau = t * i / npts;
    double acc = 0.0;
    for (int k = 0; k < m.lambda.size(); ++k) {
      const double d = 2.0 * std::abs(std::sin(0.5 * tau * m.lambda(k)));
      acc += std::pow(d, 2 * r) * m.weight(k);
    }
    best = std::max(best, std::sqrt(acc));
  }
  return best;
}

double schrodinger_modulus(int r, double t, const HalfLineFunction& f, const DiscreteOperator& op, int npts) {
  return schrodinger_modulus(r, t, spectral_measure(f, op), npts);
}

JacksonReport jackson_check(const std::vector<double>& sigma_list, int r, const std::vector<HalfLineFunction>& corpus,
                            const DiscreteOperator& op, const RepresentationSpace& space, const ModulusOptions& opt) {
  JacksonReport rep;
  rep.r = r;
  for (std::size_t fi = 0; fi < corpus.size(); ++fi) {
    const auto& f = corpus[fi];
    const SpectralProfile prof(spectral_measure(f, op));
    const double fn = space.norm(f.values);
    for (double sigma : sigma_list) {
      JacksonRow row;
      row.function_index = static_cast<int>(fi);
      row.sigma = sigma;
      row.best = prof.best_approx(sigma);
      row.rhs = modulus_mixed(space, r, 1.0 / sigma, f.values, opt) + std::min(std::pow(sigma, -r), 1.0) * fn;
      row.ratio = row.best / floored(row.rhs, fn);
      rep.c_hat = std::max(rep.c_hat, row.ratio);
      rep.rows.push_back(row);
    }
  }
  return rep;
}

double jackson_slope(const SpectralProfile& prof, double sigma_lo, int samples) {
  std::vector<double> lx, ly;
  const double floor = 1e-10 * prof.norm();
  for (int i = 0; i < samples; ++i) {
    const double sigma = sigma_lo * std::pow(10.0, static_cast<double>(i) / (samples - 1));
    const double e = prof.best_approx(sigma);
    if (e > floor) {
      lx.push_back(std::log(sigma));
      ly.push_back(std::log(e));
    }
  }
  if (lx.size() < 3) return std::numeric_limits<double>::quiet_NaN();
  const double n = static_cast<double>(lx.size());
  const double mx = std::accumulate(lx.begin(), lx.end(), 0.0) / n;
  const double my = std::accumulate(ly.begin(), ly.end(), 0.0) / n;
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    sxy += (lx[i] - mx) * (ly[i] - my);
    sxx += (lx[i] - mx) * (lx[i] - mx);
  }
  return sxy / sxx;
}

}  // namespace axb
