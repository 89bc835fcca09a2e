#include "axb/representation.hpp"

#include <cmath>

#include "axb/errors.hpp"
#include "axb/smoothing.hpp"
#include "axb/stencils.hpp"

namespace axb {

Eigen::VectorXcd RepresentationSpace::hardy_steklov_dir(int j, int r, double s, const Eigen::VectorXcd& f) const {
  if (r < 1 || !(s > 0.0)) throw DomainError("hardy_steklov needs r >= 1 and s > 0");
  const double eta = s / r;
  std::vector<double> gx, gw;
  gauss_legendre(8, gx, gw);
  const int panels = std::max(1, static_cast<int>(std::ceil(eta / 0.25)));
  const double len = eta / panels;
  Eigen::VectorXcd acc = Eigen::VectorXcd::Zero(f.size());
  for (int piece = 0; piece < r; ++piece) {
    for (int pn = 0; pn < panels; ++pn) {
      const double a = piece * eta + pn * len;
      for (std::size_t q = 0; q < gx.size(); ++q) {
        const double t = a + 0.5 * len * (gx[q] + 1.0);
        const double w = 0.5 * len * gw[q] * box_spline(r, eta, t);
        for (int k = 1; k <= r; ++k) {
          const double c = ((k % 2) ? -1.0 : 1.0) * binomial(r, k);
          acc += (w * c) * act(j, k * t, f);
        }
      }
    }
  }
  return acc;
}

Eigen::VectorXcd RepresentationSpace::hardy_steklov(int r, double s, const Eigen::VectorXcd& f) const {
  return hardy_steklov_dir(1, r, s, hardy_steklov_dir(2, r, s, f));
}

namespace {

void sobolev_tree(const RepresentationSpace& space, const Eigen::VectorXcd& g, int depth, int m, double& acc) {
  if (depth == m) return;
  for (int j = 1; j <= 2; ++j) {
    const Eigen::VectorXcd d = space.generator(j, g);
    acc += space.norm(d);
    sobolev_tree(space, d, depth + 1, m, acc);
  }
}

}  // namespace

double sobolev_norm(const RepresentationSpace& space, const Eigen::VectorXcd& f, int m) {
  if (m < 0 || m > space.max_sobolev_order()) throw DomainError("Sobolev order outside the configured range");
  double acc = space.norm(f);
  sobolev_tree(space, f, 0, m, acc);
  return acc;
}

std::vector<double> lattice_t_grid(double step, double s, int max_points, bool add_endpoint) {
  std::vector<double> out;
  if (!(s > 0.0)) return out;
  const long count = static_cast<long>(std::floor(s / step * (1.0 + 1e-12)));
  const int budget = add_endpoint ? std::max(1, max_points - 1) : max_points;
  if (count <= budget) {
    for (long k = 1; k <= count; ++k) out.push_back(k * step);
  } else {
    long prev = 0;
    for (int i = 1; i <= budget; ++i) {
      const long k = static_cast<long>(std::llround(static_cast<double>(i) * count / budget));
      if (k > prev) out.push_back(k * step);
      prev = k;
    }
  }
  const double last = count * step;
  if (add_endpoint && std::abs(s - last) > 1e-12 * s) out.push_back(s);
  return out;
}

std::vector<double> uniform_t_grid(double s, int max_points) {
  std::vector<double> out;
  if (!(s > 0.0)) return out;
  for (int i = 1; i <= max_points; ++i) out.push_back(s * i / max_points);
  return out;
}

HalfLineSpace::HalfLineSpace(GridPtr grid, double p, DiscretizationOptions opt, bool offgrid_endpoint)
    : grid_(std::move(grid)), p_(p), opt_(opt), offgrid_endpoint_(offgrid_endpoint) {
  if (!(p >= 1.0)) throw DomainError("X^p requires p >= 1");
}

double HalfLineSpace::norm(const Eigen::VectorXcd& f) const { return xp_norm(HalfLineFunction(grid_, f), p_); }

Eigen::VectorXcd HalfLineSpace::act(int j, double t, const Eigen::VectorXcd& f) const {
  if (j == 1) return shift_samples(f, t / grid_->h(), opt_.interp_points);
  if (j != 2) throw DomainError("direction must be 1 or 2");
  Eigen::VectorXcd out(f.size());
  for (int i = 0; i < f.size(); ++i) out(i) = std::polar(1.0, t * grid_->x(i)) * f(i);
  return out;
}

Eigen::VectorXcd HalfLineSpace::generator(int j, const Eigen::VectorXcd& f) const {
  return axb::generator(j, HalfLineFunction(grid_, f), opt_).values;
}

std::vector<double> HalfLineSpace::t_grid(int j, double s, int max_points) const {
  if (j == 1) return lattice_t_grid(grid_->h(), s, max_points, offgrid_endpoint_);
  return uniform_t_grid(s, max_points);
}

Eigen::VectorXcd HalfLineSpace::hardy_steklov_dir(int j, int r, double s, const Eigen::VectorXcd& f) const {
  return axb::hardy_steklov_dir({j, r, s}, HalfLineFunction(grid_, f), opt_).values;
}

}  // namespace axb
