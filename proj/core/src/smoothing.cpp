#include "axb/smoothing.hpp"

#include <algorithm>
#include <cmath>

#include "axb/errors.hpp"
#include "axb/stencils.hpp"

namespace axb {

namespace {

void check_params(int r, double s) {
  if (r < 1) throw DomainError("smoothing order r must be >= 1");
  if (!(s > 0.0) || !std::isfinite(s)) throw DomainError("smoothing scale s must be positive");
}

cplx ipow(cplx z, int r) {
  cplx out = 1.0;
  for (int i = 0; i < r; ++i) out *= z;
  return out;
}

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

double binomial(int r, int k) {
  if (k < 0 || k > r) return 0.0;
  double c = 1.0;
  for (int i = 1; i <= k; ++i) c = c * (r - k + i) / i;
  return c;
}

double box_spline(int r, double eta, double t) {
  const double z = t / eta;
  if (z < 0.0 || z > r) return 0.0;
  if (r == 1) return 1.0 / eta;
  double acc = 0.0;
  for (int k = 0; k <= r; ++k) {
    const double d = z - k;
    if (d > 0.0) acc += ((k % 2) ? -1.0 : 1.0) * binomial(r, k) * std::pow(d, r - 1);
  }
  return acc / (factorial(r - 1) * eta);
}

ConvolutionWeights direction1_weights(int r, double eta, double h, int interp_points) {
  const double support = r * eta;
  std::vector<double> br;
  for (int k = 0; k <= r; ++k) br.push_back(k * eta);
  for (long m = 1; m * h < support; ++m) br.push_back(m * h);
  std::sort(br.begin(), br.end());
  br.erase(std::unique(br.begin(), br.end(), [&](double a, double b) { return std::abs(a - b) < 1e-13 * (h + support); }),
           br.end());

  const int lo = -interp_points / 2 + 1;
  const long qmax = static_cast<long>(std::floor(support / h)) + 1;
  ConvolutionWeights cw;
  cw.offset = lo;
  cw.w.assign(static_cast<std::size_t>(qmax + interp_points + 1), 0.0);

  std::vector<double> gx, gw;
  gauss_legendre((r + interp_points) / 2 + 2, gx, gw);
  for (std::size_t piece = 0; piece + 1 < br.size(); ++piece) {
    const double a = br[piece];
    const double b = br[piece + 1];
    if (b - a <= 0.0) continue;
    const long q = static_cast<long>(std::floor(0.5 * (a + b) / h));
    for (std::size_t g = 0; g < gx.size(); ++g) {
      const double t = 0.5 * (a + b) + 0.5 * (b - a) * gx[g];
      const double weight = 0.5 * (b - a) * gw[g] * box_spline(r, eta, t);
      const auto L = lagrange_weights(t / h - q, interp_points);
      for (int p = 0; p < interp_points; ++p) cw.w[static_cast<std::size_t>(q + p)] += weight * L[p];
    }
  }
  while (!cw.w.empty() && cw.w.back() == 0.0) cw.w.pop_back();
  return cw;
}

Eigen::VectorXcd correlate(const ConvolutionWeights& k, const Eigen::VectorXcd& v) {
  const long n = v.size();
  const long len = static_cast<long>(k.w.size());
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(n);
  for (long i = 0; i < n; ++i) {
    const long m0 = std::max(0L, -(i + k.offset));
    const long m1 = std::min(len, n - (i + k.offset));
    cplx acc = 0.0;
    for (long m = m0; m < m1; ++m) acc += k.w[m] * v(i + k.offset + m);
    out(i) = acc;
  }
  return out;
}

cplx steklov_phi(double z) {
  const double half = 0.5 * z;
  const double sinc = std::abs(half) < 1e-8 ? 1.0 - half * half / 6.0 : std::sin(half) / half;
  return std::polar(sinc, half);
}

namespace {

Eigen::VectorXcd dir2_multiplier(const LogGrid& g, int r, double eta, bool hardy) {
  Eigen::VectorXcd m(g.n());
  for (int i = 0; i < g.n(); ++i) {
    const double x = g.x(i);
    if (!hardy) {
      m(i) = ipow(steklov_phi(eta * x), r);
      continue;
    }
    cplx acc = 0.0;
    for (int k = 1; k <= r; ++k) acc += ((k % 2) ? -1.0 : 1.0) * binomial(r, k) * ipow(steklov_phi(k * eta * x), r);
    m(i) = acc;
  }
  return m;
}

ConvolutionWeights hardy_dir1_weights(int r, double eta, double h, int interp_points) {
  ConvolutionWeights total;
  total.offset = -interp_points / 2 + 1;
  for (int k = 1; k <= r; ++k) {
    const auto wk = direction1_weights(r, k * eta, h, interp_points);
    const double c = ((k % 2) ? -1.0 : 1.0) * binomial(r, k);
    if (wk.w.size() > total.w.size()) total.w.resize(wk.w.size(), 0.0);
    for (std::size_t m = 0; m < wk.w.size(); ++m) total.w[m] += c * wk.w[m];
  }
  return total;
}

}  // namespace

HalfLineFunction steklov_avg(const SteklovParams& p, const HalfLineFunction& f, const DiscretizationOptions& opt) {
  check_params(p.r, p.s);
  const double eta = p.s / p.r;
  if (p.j == 2) return {f.grid, dir2_multiplier(*f.grid, p.r, eta, false).cwiseProduct(f.values)};
  if (p.j != 1) throw DomainError("direction must be 1 or 2");
  return {f.grid, correlate(direction1_weights(p.r, eta, f.grid->h(), opt.interp_points), f.values)};
}

HalfLineFunction steklov(int r, double s, const HalfLineFunction& f, const DiscretizationOptions& opt) {
  return steklov_avg({1, r, s}, steklov_avg({2, r, s}, f, opt), opt);
}

HalfLineFunction m_operator(int j, int r, double t_sum, const HalfLineFunction& f, const DiscretizationOptions& opt) {
  if (r < 1) throw DomainError("order r must be >= 1");
  HalfLineFunction acc = HalfLineFunction::zeros(f.grid);
  for (int k = 1; k <= r; ++k) {
    const double c = ((k % 2) ? -1.0 : 1.0) * binomial(r, k);
    const HalfLineFunction tk = j == 1 ? act_dilation(k * t_sum, f, opt) : act_modulation(k * t_sum, f);
    acc.values += c * tk.values;
  }
  return acc;
}

HalfLineFunction hardy_steklov_dir(const SteklovParams& p, const HalfLineFunction& f, const DiscretizationOptions& opt) {
  check_params(p.r, p.s);
  const double eta = p.s / p.r;
  if (p.j == 2) return {f.grid, dir2_multiplier(*f.grid, p.r, eta, true).cwiseProduct(f.values)};
  if (p.j != 1) throw DomainError("direction must be 1 or 2");
  return {f.grid, correlate(hardy_dir1_weights(p.r, eta, f.grid->h(), opt.interp_points), f.values)};
}

HalfLineFunction hardy_steklov(int r, double s, const HalfLineFunction& f, const DiscretizationOptions& opt) {
  return hardy_steklov_dir({1, r, s}, hardy_steklov_dir({2, r, s}, f, opt), opt);
}

HalfLineFunction steklov_dir2_quadrature(int r, double s, const HalfLineFunction& f) {
  check_params(r, s);
  const double eta = s / r;
  std::vector<double> gx, gw;
  gauss_legendre(20, gx, gw);
  const auto& g = *f.grid;
  Eigen::VectorXcd out(g.n());
  for (int i = 0; i < g.n(); ++i) {
    const double x = g.x(i);
    const int panels = std::max(1, static_cast<int>(std::ceil(eta * x / 2.0)));
    const double len = eta / panels;
    cplx acc = 0.0;
    for (int piece = 0; piece < r; ++piece) {
      for (int pn = 0; pn < panels; ++pn) {
        const double a = piece * eta + pn * len;
        for (std::size_t q = 0; q < gx.size(); ++q) {
          const double t = a + 0.5 * len * (gx[q] + 1.0);
          acc += 0.5 * len * gw[q] * box_spline(r, eta, t) * std::polar(1.0, t * x);
        }
      }
    }
    out(i) = acc * f.values(i);
  }
  return {f.grid, std::move(out)};
}

double commutation_check(int m, double t1, double t2, const HalfLineFunction& f, const DiscretizationOptions& opt) {
  if (m < 1) throw DomainError("commutation power m must be >= 1");
  auto a2m = [m](const HalfLineFunction& g) {
    HalfLineFunction out = g;
    for (int k = 0; k < m; ++k) out = generator(2, out);
    return out;
  };
  const HalfLineFunction lhs = a2m(act_dilation(t1, act_modulation(t2, f), opt));
  const HalfLineFunction rhs = std::exp(-m * t1) * act_dilation(t1, act_modulation(t2, a2m(f)), opt);
  const double ref = std::max(xp_norm(lhs), 1e-14 * xp_norm(f));
  return ref > 0.0 ? xp_norm(lhs - rhs) / ref : 0.0;
}

}  // namespace axb
