#include "axb/halfplane.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "axb/errors.hpp"
#include "axb/halfline.hpp"
#include "axb/stencils.hpp"

namespace axb {

const char* side_name(Side s) { return s == Side::left ? "left" : "right"; }

HalfPlaneGrid::HalfPlaneGrid(GridPtr u_axis, double y_min, double y_max, int n_y, int cap)
    : u_(std::move(u_axis)), y_min_(y_min), y_max_(y_max), n_y_(n_y) {
  if (!u_) throw DomainError("half-plane grid needs a log axis");
  if (!(y_max > y_min) || n_y < 2) throw DomainError("invalid y axis");
  if (static_cast<long>(u_->n()) * n_y > cap) throw CapacityError("half-plane grid exceeds the node cap");
  h_y_ = (y_max - y_min) / (n_y - 1);
  const int n = size();
  w_left_.resize(n);
  w_right_.resize(n);
  const auto& wu = u_->weights();
  for (int i = 0; i < n_u(); ++i) {
    for (int k = 0; k < n_y_; ++k) {
      const double wy = (k == 0 || k == n_y_ - 1) ? 0.5 * h_y_ : h_y_;
      w_right_(index(i, k)) = wu(i) * wy;
      w_left_(index(i, k)) = wu(i) * wy * std::exp(-u_->u(i));
    }
  }
}

std::string HalfPlaneGrid::key() const {
  char buf[96];
  std::snprintf(buf, sizeof buf, "y[%.17g,%.17g,%d]", y_min_, y_max_, n_y_);
  return u_->key() + "x" + buf;
}

PlaneGridPtr make_halfplane_grid(int n_u, int n_y, double u_min, double u_max, double y_min, double y_max, int cap) {
  return std::make_shared<const HalfPlaneGrid>(make_log_grid(u_min, u_max, n_u), y_min, y_max, n_y, cap);
}

HalfPlaneFunction HalfPlaneFunction::sample(PlaneGridPtr g, const std::function<cplx(double, double)>& fn) {
  Eigen::VectorXcd v(g->size());
  for (int i = 0; i < g->n_u(); ++i) {
    for (int k = 0; k < g->n_y(); ++k) v(g->index(i, k)) = fn(g->u_axis().x(i), g->y(k));
  }
  return {std::move(g), std::move(v)};
}

namespace {

double weighted_norm(const Eigen::VectorXd& w, const Eigen::VectorXcd& f, double p) {
  if (!(p >= 1.0)) throw DomainError("Lp norm requires p >= 1");
  double acc = 0.0;
  for (int i = 0; i < f.size(); ++i) acc += w(i) * (p == 2.0 ? std::norm(f(i)) : std::pow(std::abs(f(i)), p));
  return std::pow(acc, 1.0 / p);
}

Eigen::VectorXcd spmv(const Eigen::SparseMatrix<double>& a, const Eigen::VectorXcd& f) {
  const Eigen::VectorXd re = a * f.real();
  const Eigen::VectorXd im = a * f.imag();
  Eigen::VectorXcd out(re.size());
  for (int i = 0; i < re.size(); ++i) out(i) = cplx(re(i), im(i));
  return out;
}

Eigen::VectorXcd spmv_t(const Eigen::SparseMatrix<double>& a, const Eigen::VectorXcd& f) {
  const Eigen::VectorXd re = a.transpose() * f.real();
  const Eigen::VectorXd im = a.transpose() * f.imag();
  Eigen::VectorXcd out(re.size());
  for (int i = 0; i < re.size(); ++i) out(i) = cplx(re(i), im(i));
  return out;
}

// Triplets of a central derivative along one axis, scaled per row by coef(iu, iy).
void add_axis_derivative(const HalfPlaneGrid& g, bool along_u, int deriv, int order,
                         const std::function<double(int, int)>& coef, std::vector<Eigen::Triplet<double>>& trip) {
  const auto st = central_stencil(deriv, order);
  const int w = st.half_width();
  const double h = along_u ? g.u_axis().h() : g.h_y();
  const double scale = std::pow(h, -deriv);
  for (int i = 0; i < g.n_u(); ++i) {
    for (int k = 0; k < g.n_y(); ++k) {
      const double c = coef(i, k);
      if (c == 0.0) continue;
      for (int o = -w; o <= w; ++o) {
        const double s = st.coeffs[w + o];
        if (s == 0.0) continue;
        const int ii = along_u ? i + o : i;
        const int kk = along_u ? k : k + o;
        if (ii < 0 || ii >= g.n_u() || kk < 0 || kk >= g.n_y()) continue;
        trip.emplace_back(g.index(i, k), g.index(ii, kk), c * s * scale);
      }
    }
  }
}

Eigen::SparseMatrix<double> from_triplets(int n, const std::vector<Eigen::Triplet<double>>& trip) {
  Eigen::SparseMatrix<double> m(n, n);
  m.setFromTriplets(trip.begin(), trip.end());
  return m;
}

Eigen::SparseMatrix<double> axis_matrix(const HalfPlaneGrid& g, bool along_u, int deriv, int order,
                                        const std::function<double(int, int)>& coef) {
  std::vector<Eigen::Triplet<double>> trip;
  add_axis_derivative(g, along_u, deriv, order, coef, trip);
  return from_triplets(g.size(), trip);
}

}  // namespace

double lp_norm_2d(const HalfPlaneFunction& f, double p, Side side) {
  return weighted_norm(f.grid->weights(side), f.values, p);
}

HalfPlaneFunction act_2d(const GroupElement& g, const HalfPlaneFunction& f, Side side, int interp_points) {
  const auto& gr = *f.grid;
  const int nu = gr.n_u(), ny = gr.n_y();
  const double hu = gr.u_axis().h();
  const double la = std::log(g.a);
  Eigen::VectorXcd out(f.values.size());
  if (side == Side::left) {
    // f(u + ln a, a y + b): u-shift per column, then resample each row at a y + b.
    Eigen::VectorXcd tmp(f.values.size());
    for (int k = 0; k < ny; ++k) shift_line(f.values.data() + k, tmp.data() + k, nu, ny, la / hu, interp_points);
    if (g.a == 1.0) {
      for (int i = 0; i < nu; ++i) shift_line(tmp.data() + i * ny, out.data() + i * ny, ny, 1, g.b / gr.h_y(), interp_points);
    } else {
      for (int i = 0; i < nu; ++i) {
        for (int k = 0; k < ny; ++k) {
          const double pos = (g.a * gr.y(k) + g.b - gr.y_min()) / gr.h_y();
          out(gr.index(i, k)) = sample_at(tmp.data() + i * ny, ny, 1, pos, interp_points);
        }
      }
    }
  } else {
    // f(u + ln a, y + e^u b): row-dependent y-shift evaluated at u' = u + ln a, then the u-shift.
    Eigen::VectorXcd tmp(f.values.size());
    for (int i = 0; i < nu; ++i) {
      const double shift = std::exp(gr.u_axis().u(i)) / g.a * g.b / gr.h_y();
      shift_line(f.values.data() + i * ny, tmp.data() + i * ny, ny, 1, shift, interp_points);
    }
    for (int k = 0; k < ny; ++k) shift_line(tmp.data() + k, out.data() + k, nu, ny, la / hu, interp_points);
  }
  return {f.grid, std::move(out)};
}

Eigen::SparseMatrix<double> generator_matrix(const HalfPlaneGrid& grid, Side side, int j, int fd_order) {
  if (j != 1 && j != 2) throw DomainError("generator index must be 1 or 2");
  std::vector<Eigen::Triplet<double>> trip;
  const auto one = [](int, int) { return 1.0; };
  if (side == Side::left) {
    if (j == 1) {
      add_axis_derivative(grid, true, 1, fd_order, one, trip);
      add_axis_derivative(grid, false, 1, fd_order, [&](int, int k) { return grid.y(k); }, trip);
    } else {
      add_axis_derivative(grid, false, 1, fd_order, one, trip);
    }
  } else {
    if (j == 1) {
      add_axis_derivative(grid, true, 1, fd_order, one, trip);
    } else {
      add_axis_derivative(grid, false, 1, fd_order, [&](int i, int) { return std::exp(grid.u_axis().u(i)); }, trip);
    }
  }
  return from_triplets(grid.size(), trip);
}

HalfPlaneFunction generator_2d(int j, const HalfPlaneFunction& f, Side side, int fd_order) {
  return {f.grid, spmv(generator_matrix(*f.grid, side, j, fd_order), f.values)};
}

HalfPlaneSpace::HalfPlaneSpace(PlaneGridPtr grid, Side side, double p, int fd_order, int interp_points)
    : grid_(std::move(grid)), side_(side), p_(p), interp_points_(interp_points) {
  if (!(p >= 1.0)) throw DomainError("Lp norm requires p >= 1");
  d1_ = generator_matrix(*grid_, side_, 1, fd_order);
  d2_ = generator_matrix(*grid_, side_, 2, fd_order);
}

std::string HalfPlaneSpace::name() const { return std::string("halfplane_") + side_name(side_); }

double HalfPlaneSpace::norm(const Eigen::VectorXcd& f) const { return weighted_norm(grid_->weights(side_), f, p_); }

Eigen::VectorXcd HalfPlaneSpace::act(int j, double t, const Eigen::VectorXcd& f) const {
  if (j != 1 && j != 2) throw DomainError("direction must be 1 or 2");
  const GroupElement g = j == 1 ? GroupElement{std::exp(t), 0.0} : GroupElement{1.0, t};
  return act_2d(g, HalfPlaneFunction{grid_, f}, side_, interp_points_).values;
}

Eigen::VectorXcd HalfPlaneSpace::generator(int j, const Eigen::VectorXcd& f) const {
  if (j != 1 && j != 2) throw DomainError("generator index must be 1 or 2");
  return spmv(j == 1 ? d1_ : d2_, f);
}

std::vector<double> HalfPlaneSpace::t_grid(int j, double s, int max_points) const {
  if (side_ == Side::left) {
    return j == 2 ? lattice_t_grid(grid_->h_y(), s, max_points, true) : uniform_t_grid(s, max_points);
  }
  return j == 1 ? lattice_t_grid(grid_->u_axis().h(), s, max_points, true) : uniform_t_grid(s, max_points);
}

double modulus_mixed_2d(int r, double s, const HalfPlaneFunction& f, double p, Side side, const ModulusOptions& opt) {
  const HalfPlaneSpace space(f.grid, side, p);
  return modulus_mixed(space, r, s, f.values, opt);
}

PlaneLaplacian::PlaneLaplacian(PlaneGridPtr grid, Side side, int fd_order) : grid_(std::move(grid)), side_(side) {
  d1_ = generator_matrix(*grid_, side_, 1, fd_order);
  d2_ = generator_matrix(*grid_, side_, 2, fd_order);
  const Eigen::VectorXd& w = grid_->weights(side_);
  const Eigen::VectorXd sw = w.cwiseSqrt();
  const Eigen::VectorXd isw = sw.cwiseInverse();
  Eigen::MatrixXd s = Eigen::MatrixXd::Zero(grid_->size(), grid_->size());
  for (const auto* d : {&d1_, &d2_}) {
    const Eigen::SparseMatrix<double> b = sw.asDiagonal() * (*d) * isw.asDiagonal();
    const Eigen::SparseMatrix<double> btb = Eigen::SparseMatrix<double>(b.transpose()) * b;
    s += Eigen::MatrixXd(btb);
  }
  dec_ = SpectralDecomposition(w, s);
}

Eigen::VectorXcd PlaneLaplacian::apply(const Eigen::VectorXcd& f) const {
  const Eigen::VectorXd& w = grid_->weights(side_);
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(f.size());
  for (const auto* d : {&d1_, &d2_}) {
    const Eigen::VectorXcd wdf = w.asDiagonal() * spmv(*d, f);
    out += w.cwiseInverse().asDiagonal() * spmv_t(*d, wdf);
  }
  return out;
}

Eigen::VectorXcd PlaneLaplacian::power(double s, const Eigen::VectorXcd& f) const {
  return dec_.apply([s](double lam) { return cplx(std::pow(std::max(lam, 0.0), s)); }, f);
}

PlaneLaplacianPtr laplacian_2d(Side side, PlaneGridPtr grid, int fd_order) {
  if (grid->size() > 4096) throw CapacityError("dense half-plane eigensolve is capped at 4096 nodes");
  return std::make_shared<const PlaneLaplacian>(std::move(grid), side, fd_order);
}

Eigen::VectorXcd expanded_laplacian(Side side, const HalfPlaneGrid& grid, const Eigen::VectorXcd& f, int fd_order) {
  const auto one = [](int, int) { return 1.0; };
  const Eigen::VectorXcd fuu = spmv(axis_matrix(grid, true, 2, fd_order, one), f);
  const Eigen::VectorXcd fyy = spmv(axis_matrix(grid, false, 2, fd_order, one), f);
  Eigen::VectorXcd out(f.size());
  if (side == Side::right) {
    for (int i = 0; i < grid.n_u(); ++i) {
      const double e2u = std::exp(2.0 * grid.u_axis().u(i));
      for (int k = 0; k < grid.n_y(); ++k) {
        const int n = grid.index(i, k);
        out(n) = -fuu(n) - e2u * fyy(n);
      }
    }
    return out;
  }
  const auto du = axis_matrix(grid, true, 1, fd_order, one);
  const auto dy = axis_matrix(grid, false, 1, fd_order, one);
  const Eigen::VectorXcd fy = spmv(dy, f);
  const Eigen::VectorXcd fuy = spmv(du, fy);
  for (int i = 0; i < grid.n_u(); ++i) {
    for (int k = 0; k < grid.n_y(); ++k) {
      const int n = grid.index(i, k);
      const double y = grid.y(k);
      out(n) = -(1.0 + y * y) * fyy(n) - fuu(n) - 2.0 * y * fuy(n) - y * fy(n);
    }
  }
  return out;
}

double interior_residual_2d(const HalfPlaneGrid& grid, const Eigen::VectorXcd& a, const Eigen::VectorXcd& b, int margin) {
  double num = 0.0, den = 0.0;
  for (int i = margin; i < grid.n_u() - margin; ++i) {
    for (int k = margin; k < grid.n_y() - margin; ++k) {
      const int n = grid.index(i, k);
      num += std::norm(a(n) - b(n));
      den += std::norm(b(n));
    }
  }
  return den > 0.0 ? std::sqrt(num / den) : std::sqrt(num);
}

CommutatorReport commutator_check(Side side, const HalfPlaneFunction& f, int fd_order) {
  const auto& g = *f.grid;
  const auto d1 = generator_matrix(g, side, 1, fd_order);
  const auto d2 = generator_matrix(g, side, 2, fd_order);
  const Eigen::VectorXcd d1f = spmv(d1, f.values);
  const Eigen::VectorXcd d2f = spmv(d2, f.values);
  const Eigen::VectorXcd comm = spmv(d1, d2f) - spmv(d2, d1f);
  const int margin = 2 * central_stencil(1, fd_order).half_width();
  CommutatorReport rep;
  rep.forced_residual =
      side == Side::left ? interior_residual_2d(g, comm, -d2f, margin) : interior_residual_2d(g, comm, d2f, margin);
  rep.stated_residual = interior_residual_2d(g, comm, d1f, margin);
  return rep;
}

IsometryReport isometry_defects(const HalfPlaneFunction& f, Side side) {
  const auto& g = *f.grid;
  const double n0 = lp_norm_2d(f, 2.0, side);
  auto element = [&](double k) {
    return side == Side::left ? GroupElement{1.0, k * g.h_y()} : GroupElement{std::exp(k * g.u_axis().h()), 0.0};
  };
  auto defect = [&](double k) { return std::abs(lp_norm_2d(act_2d(element(k), f, side), 2.0, side) - n0) / n0; };
  IsometryReport rep;
  for (int k = 1; k <= 3; ++k) rep.max_defect = std::max(rep.max_defect, defect(k));
  rep.offgrid_defect = defect(0.37);
  return rep;
}

SobolevGraphReport sobolev_graph_check(const std::vector<HalfPlaneFunction>& corpus, int m, const PlaneLaplacian& lap) {
  if (m < 1) throw DomainError("Sobolev order m must be >= 1");
  SobolevGraphReport rep;
  rep.m = m;
  const HalfPlaneSpace space(lap.grid(), lap.side());
  for (const auto& f : corpus) {
    const double fn = space.norm(f.values);
    const double graph_m = fn + space.norm(lap.power(0.5 * m, f.values));
    const double graph_2m = fn + space.norm(lap.power(m, f.values));
    const double r1 = sobolev_norm(space, f.values, m) / graph_m;
    const double r2 = sobolev_norm(space, f.values, 2 * m) / graph_2m;
    rep.ratio_m.push_back(r1);
    rep.ratio_2m.push_back(r2);
    for (double r : {r1, r2}) {
      if (!std::isfinite(r) || r <= 0.0) {
        rep.finite = false;
        continue;
      }
      rep.max_ratio = std::max({rep.max_ratio, r, 1.0 / r});
    }
  }
  return rep;
}

HalfPlaneFunction plane_gaussian(PlaneGridPtr g, double u0, double su, double y0, double sy) {
  return HalfPlaneFunction::sample(std::move(g), [=](double x, double y) {
    const double du = (std::log(x) - u0) / su;
    const double dy = (y - y0) / sy;
    return cplx(std::exp(-0.5 * (du * du + dy * dy)));
  });
}

std::string PlaneCorpusEntry::id() const {
  char buf[128];
  std::snprintf(buf, sizeof buf, "plane_gaussian:u0=%g,su=%g,y0=%g,sy=%g", u0, su, y0, sy);
  return buf;
}

std::vector<PlaneCorpusEntry> default_plane_corpus() {
  return {{0.0, 1.0, 0.0, 1.0}, {0.5, 0.8, 1.0, 1.2}, {-0.5, 0.9, -1.0, 0.8}};
}

}  // namespace axb
