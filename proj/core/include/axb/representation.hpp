#pragma once

#include <string>
#include <vector>

#include "axb/halfline.hpp"

namespace axb {

/// A space E with two one-parameter groups T_1, T_2, their generators and a
/// finite set of admissible shifts for sup-type quantities. Implementations
/// are immutable and safe for concurrent read-only use.
class RepresentationSpace {
 public:
  virtual ~RepresentationSpace() = default;

  virtual std::string name() const = 0;
  virtual double norm(const Eigen::VectorXcd& f) const = 0;
  virtual Eigen::VectorXcd act(int j, double t, const Eigen::VectorXcd& f) const = 0;
  virtual Eigen::VectorXcd generator(int j, const Eigen::VectorXcd& f) const = 0;
  /// Admissible t in (0, s] for direction j, at most max_points of them.
  virtual std::vector<double> t_grid(int j, double s, int max_points) const = 0;
  virtual int max_sobolev_order() const { return 4; }

  /// H_{j,r}(s) f. The default integrates the box density against T_j(k t) f
  /// with composite Gauss-Legendre quadrature.
  virtual Eigen::VectorXcd hardy_steklov_dir(int j, int r, double s, const Eigen::VectorXcd& f) const;

  /// H_r(s) f = H_{1,r}(s) H_{2,r}(s) f.
  Eigen::VectorXcd hardy_steklov(int r, double s, const Eigen::VectorXcd& f) const;
};

/// ||f|| + sum_{k=1..m} sum_{|w|=k} ||A_w f||.
double sobolev_norm(const RepresentationSpace& space, const Eigen::VectorXcd& f, int m);

/// The half-line model X^p with U_1(t) f(x) = f(e^t x) and U_2(t) f(x) = e^{itx} f(x).
class HalfLineSpace : public RepresentationSpace {
 public:
  explicit HalfLineSpace(GridPtr grid, double p = 2.0, DiscretizationOptions opt = {}, bool offgrid_endpoint = true);

  std::string name() const override { return "halfline"; }
  double norm(const Eigen::VectorXcd& f) const override;
  Eigen::VectorXcd act(int j, double t, const Eigen::VectorXcd& f) const override;
  Eigen::VectorXcd generator(int j, const Eigen::VectorXcd& f) const override;
  std::vector<double> t_grid(int j, double s, int max_points) const override;
  int max_sobolev_order() const override { return opt_.max_sobolev_order; }
  Eigen::VectorXcd hardy_steklov_dir(int j, int r, double s, const Eigen::VectorXcd& f) const override;

  const GridPtr& grid() const { return grid_; }
  double p() const { return p_; }
  const DiscretizationOptions& options() const { return opt_; }

 private:
  GridPtr grid_;
  double p_;
  DiscretizationOptions opt_;
  bool offgrid_endpoint_;
};

/// Subsample of the multiples k*step <= s (at most max_points, always keeping
/// the largest), optionally followed by s itself when it is not a multiple.
std::vector<double> lattice_t_grid(double step, double s, int max_points, bool add_endpoint);

/// s * i / max_points for i = 1..max_points.
std::vector<double> uniform_t_grid(double s, int max_points);

}  // namespace axb
