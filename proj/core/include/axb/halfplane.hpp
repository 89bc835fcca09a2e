#pragma once

#include <memory>
#include <string>
#include <vector>

#include <Eigen/Sparse>

#include "axb/eigensolve.hpp"
#include "axb/grid.hpp"
#include "axb/group.hpp"
#include "axb/moduli.hpp"
#include "axb/representation.hpp"

namespace axb {

enum class Side { left, right };

const char* side_name(Side s);

/// Tensor grid: log axis u = ln x (LogGrid) times a uniform y axis. Samples are
/// stored row-major with index i_u * n_y + i_y.
class HalfPlaneGrid {
 public:
  HalfPlaneGrid(GridPtr u_axis, double y_min, double y_max, int n_y, int cap = 4096);

  const LogGrid& u_axis() const { return *u_; }
  const GridPtr& u_axis_ptr() const { return u_; }
  int n_u() const { return u_->n(); }
  int n_y() const { return n_y_; }
  int size() const { return n_u() * n_y_; }
  double y_min() const { return y_min_; }
  double y_max() const { return y_max_; }
  double h_y() const { return h_y_; }
  double y(int k) const { return y_min_ + k * h_y_; }
  int index(int iu, int iy) const { return iu * n_y_ + iy; }
  /// Tensor trapezoid weights times e^{-u} (left, x^{-2} dx dy) or 1 (right, x^{-1} dx dy).
  const Eigen::VectorXd& weights(Side side) const { return side == Side::left ? w_left_ : w_right_; }
  std::string key() const;

 private:
  GridPtr u_;
  double y_min_, y_max_, h_y_;
  int n_y_;
  Eigen::VectorXd w_left_, w_right_;
};

using PlaneGridPtr = std::shared_ptr<const HalfPlaneGrid>;

/// Defaults: u in [-6, 6] and y in [-8, 8], 48 x 48 nodes.
PlaneGridPtr make_halfplane_grid(int n_u = 48, int n_y = 48, double u_min = -6.0, double u_max = 6.0,
                                 double y_min = -8.0, double y_max = 8.0, int cap = 4096);

struct HalfPlaneFunction {
  PlaneGridPtr grid;
  Eigen::VectorXcd values;

  static HalfPlaneFunction sample(PlaneGridPtr g, const std::function<cplx(double x, double y)>& fn);
};

double lp_norm_2d(const HalfPlaneFunction& f, double p, Side side);

/// Left: f(ax, ay + b). Right: f(xa, xb + y). Lagrange interpolation off the grid, zero extension.
HalfPlaneFunction act_2d(const GroupElement& g, const HalfPlaneFunction& f, Side side, int interp_points = 8);

/// Sparse finite-difference matrix of a generator. Left: D1 = x d/dx + y d/dy, D2 = d/dy.
/// Right: D1 = x d/dx, D2 = x d/dy.
Eigen::SparseMatrix<double> generator_matrix(const HalfPlaneGrid& grid, Side side, int j, int fd_order = 8);

HalfPlaneFunction generator_2d(int j, const HalfPlaneFunction& f, Side side, int fd_order = 8);

/// The half-plane models through the shared representation interface.
class HalfPlaneSpace : public RepresentationSpace {
 public:
  HalfPlaneSpace(PlaneGridPtr grid, Side side, double p = 2.0, int fd_order = 8, int interp_points = 8);

  std::string name() const override;
  double norm(const Eigen::VectorXcd& f) const override;
  Eigen::VectorXcd act(int j, double t, const Eigen::VectorXcd& f) const override;
  Eigen::VectorXcd generator(int j, const Eigen::VectorXcd& f) const override;
  std::vector<double> t_grid(int j, double s, int max_points) const override;

  const PlaneGridPtr& grid() const { return grid_; }
  Side side() const { return side_; }

 private:
  PlaneGridPtr grid_;
  Side side_;
  double p_;
  int interp_points_;
  Eigen::SparseMatrix<double> d1_, d2_;
};

double modulus_mixed_2d(int r, double s, const HalfPlaneFunction& f, double p, Side side,
                        const ModulusOptions& opt = {});

/// Discrete Delta = D_1^+ D_1 + D_2^+ D_2 with adjoints for the weighted inner
/// product, together with its eigensystem.
class PlaneLaplacian {
 public:
  PlaneLaplacian(PlaneGridPtr grid, Side side, int fd_order = 8);

  const PlaneGridPtr& grid() const { return grid_; }
  Side side() const { return side_; }
  const SpectralDecomposition& decomposition() const { return dec_; }
  double min_eigenvalue() const { return dec_.eigenvalues()(0); }
  Eigen::VectorXcd apply(const Eigen::VectorXcd& f) const;
  /// Delta^{s} f through the eigensystem.
  Eigen::VectorXcd power(double s, const Eigen::VectorXcd& f) const;

 private:
  PlaneGridPtr grid_;
  Side side_;
  Eigen::SparseMatrix<double> d1_, d2_;
  SpectralDecomposition dec_;
};

using PlaneLaplacianPtr = std::shared_ptr<const PlaneLaplacian>;

/// Throws CapacityError when the grid exceeds 4096 nodes.
PlaneLaplacianPtr laplacian_2d(Side side, PlaneGridPtr grid, int fd_order = 8);

/// Second-order expanded formula evaluated with direct stencils; left:
/// -(1+y^2) f_yy - f_uu - 2y f_uy - y f_y, right: -f_uu - e^{2u} f_yy.
Eigen::VectorXcd expanded_laplacian(Side side, const HalfPlaneGrid& grid, const Eigen::VectorXcd& f, int fd_order = 8);

/// Relative residual over nodes at least `margin` nodes from every edge.
double interior_residual_2d(const HalfPlaneGrid& grid, const Eigen::VectorXcd& a, const Eigen::VectorXcd& b, int margin);

struct CommutatorReport {
  double forced_residual = 0.0;  ///< left: [D1,D2] f + D2 f; right: [D1,D2] f - D2 f
  double stated_residual = 0.0;  ///< [D1,D2] f - D1 f
};

CommutatorReport commutator_check(Side side, const HalfPlaneFunction& f, int fd_order = 8);

struct IsometryReport {
  double max_defect = 0.0;       ///< grid-compatible parameters
  double offgrid_defect = 0.0;   ///< one interpolated parameter, for information
};

/// Left: (1, k h_y); right: (e^{k h_u}, 0), k = 1..3.
IsometryReport isometry_defects(const HalfPlaneFunction& f, Side side);

struct SobolevGraphReport {
  int m = 1;
  std::vector<double> ratio_m;   ///< Sobolev-m / (||f|| + ||Delta^{m/2} f||)
  std::vector<double> ratio_2m;  ///< Sobolev-2m / (||f|| + ||Delta^m f||)
  double max_ratio = 0.0;        ///< max over both lists of max(ratio, 1/ratio)
  bool finite = true;
};

SobolevGraphReport sobolev_graph_check(const std::vector<HalfPlaneFunction>& corpus, int m, const PlaneLaplacian& lap);

/// Log-Gaussian times Gaussian, e^{-(u-u0)^2/(2 su^2)} e^{-(y-y0)^2/(2 sy^2)}.
HalfPlaneFunction plane_gaussian(PlaneGridPtr g, double u0, double su, double y0, double sy);

struct PlaneCorpusEntry {
  double u0, su, y0, sy;
  std::string id() const;
};

std::vector<PlaneCorpusEntry> default_plane_corpus();

}  // namespace axb
