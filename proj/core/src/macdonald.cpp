#include "axb/macdonald.hpp"

#include <cmath>
#include <complex>
#include <vector>

#include "axb/errors.hpp"

namespace axb {

namespace {

constexpr double kTailExponent = 40.0;
constexpr int kMaxHalvings = 12;

double truncation_point(double x) { return std::acosh(1.0 + kTailExponent / x); }

double initial_step(double x) { return std::min(0.2, 1.0 / std::sqrt(x)); }

// exp(-x (cosh t - 1)) with cosh t - 1 = 2 sinh^2(t/2) for accuracy near t = 0.
double scaled_integrand(double x, double t) {
  const double sh = std::sinh(0.5 * t);
  return std::exp(-2.0 * x * sh * sh);
}

struct Sums {
  double value;  // trapezoid sum times step
  double l1;     // same with absolute values
};

Sums trapezoid(double tau, double x, double step, double t_end) {
  const int count = static_cast<int>(std::ceil(t_end / step));
  double acc = 0.5;  // t = 0 term with half weight
  double l1 = 0.5;
  for (int l = 1; l <= count; ++l) {
    const double t = l * step;
    const double v = scaled_integrand(x, t) * std::cos(tau * t);
    acc += v;
    l1 += std::abs(v);
  }
  return {acc * step, l1 * step};
}

bool converged(const Sums& fine, const Sums& coarse) {
  const double diff = std::abs(fine.value - coarse.value);
  return diff <= 1e-14 * std::abs(fine.value) || diff <= 4e-16 * fine.l1;
}

double converged_step(double tau, double x, double t_end) {
  double step = initial_step(x);
  Sums coarse = trapezoid(tau, x, step, t_end);
  for (int k = 0; k < kMaxHalvings; ++k) {
    const Sums fine = trapezoid(tau, x, 0.5 * step, t_end);
    step *= 0.5;
    if (converged(fine, coarse)) return step;
    coarse = fine;
  }
  return step;
}

}  // namespace

double macdonald_kernel(double tau, double x) {
  if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("macdonald_kernel requires x > 0");
  if (tau < 0.0) tau = -tau;
  const double t_end = truncation_point(x);
  const double step = converged_step(tau, x, t_end);
  return trapezoid(tau, x, step, t_end).value * std::exp(-x);
}

Eigen::VectorXd macdonald_row(double x, double dtau, int m) {
  if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("macdonald_row requires x > 0");
  const double t_end = truncation_point(x);
  const double tau_max = dtau * (m - 1);
  const double step = std::min(converged_step(0.0, x, t_end), converged_step(tau_max, x, t_end));
  const int count = static_cast<int>(std::ceil(t_end / step));

  Eigen::VectorXd row = Eigen::VectorXd::Zero(m);
  // cos(k theta) by complex rotation, re-anchored to libm every 32 steps.
  for (int l = 0; l <= count; ++l) {
    const double t = l * step;
    const double e = (l == 0 ? 0.5 : 1.0) * scaled_integrand(x, t);
    if (e == 0.0) continue;
    const double theta = dtau * t;
    const std::complex<double> w = std::polar(1.0, theta);
    std::complex<double> z = 1.0;
    for (int k = 0; k < m; ++k) {
      if (k % 32 == 0) z = std::polar(1.0, k * theta);
      row(k) += e * z.real();
      z *= w;
    }
  }
  return row * (step * std::exp(-x));
}

}  // namespace axb
