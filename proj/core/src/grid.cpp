#include "axb/grid.hpp"

#include <cmath>
#include <cstdio>

#include "axb/errors.hpp"

namespace axb {

LogGrid::LogGrid(double u_min, double u_max, int n) : u_min_(u_min), u_max_(u_max), n_(n) {
  if (!(u_min < u_max) || !std::isfinite(u_min) || !std::isfinite(u_max)) {
    throw DomainError("log grid requires finite u_min < u_max");
  }
  if (n < 16) throw DomainError("log grid requires n >= 16");
  h_ = (u_max - u_min) / (n - 1);
  u_.resize(n);
  x_.resize(n);
  w_.setConstant(n, h_);
  for (int i = 0; i < n; ++i) {
    u_(i) = u_min + i * h_;
    x_(i) = std::exp(u_(i));
  }
  w_(0) = w_(n - 1) = 0.5 * h_;
}

bool LogGrid::same_as(const LogGrid& o) const {
  return n_ == o.n_ && u_min_ == o.u_min_ && u_max_ == o.u_max_;
}

std::string LogGrid::key() const {
  char buf[96];
  std::snprintf(buf, sizeof buf, "log[%.17g,%.17g,%d]", u_min_, u_max_, n_);
  return buf;
}

GridPtr make_log_grid(double u_min, double u_max, int n) {
  return std::make_shared<const LogGrid>(u_min, u_max, n);
}

HalfLineFunction::HalfLineFunction(GridPtr g, Eigen::VectorXcd v) : grid(std::move(g)), values(std::move(v)) {
  if (!grid) throw DomainError("function without grid");
  if (values.size() != grid->n()) throw GridMismatch("sample count does not match grid");
}

HalfLineFunction HalfLineFunction::zeros(GridPtr g) {
  const int n = g->n();
  return HalfLineFunction(std::move(g), Eigen::VectorXcd::Zero(n));
}

HalfLineFunction HalfLineFunction::sample(GridPtr g, const std::function<cplx(double)>& fx) {
  Eigen::VectorXcd v(g->n());
  for (int i = 0; i < g->n(); ++i) v(i) = fx(g->x(i));
  return HalfLineFunction(std::move(g), std::move(v));
}

void require_same_grid(const HalfLineFunction& f, const HalfLineFunction& g) {
  if (f.grid != g.grid && !f.grid->same_as(*g.grid)) {
    throw GridMismatch("functions live on different grids: " + f.grid->key() + " vs " + g.grid->key());
  }
}

HalfLineFunction operator+(const HalfLineFunction& f, const HalfLineFunction& g) {
  require_same_grid(f, g);
  return {f.grid, f.values + g.values};
}

HalfLineFunction operator-(const HalfLineFunction& f, const HalfLineFunction& g) {
  require_same_grid(f, g);
  return {f.grid, f.values - g.values};
}

HalfLineFunction operator*(cplx c, const HalfLineFunction& f) { return {f.grid, c * f.values}; }

}  // namespace axb
