#pragma once

#include <Eigen/Dense>
#include <complex>
#include <functional>
#include <memory>
#include <string>

namespace axb {

using cplx = std::complex<double>;

/// Uniform grid u_i = u_min + i h on the log axis, x_i = e^{u_i}; dx/x = du.
class LogGrid {
 public:
  LogGrid(double u_min, double u_max, int n);

  double u_min() const { return u_min_; }
  double u_max() const { return u_max_; }
  int n() const { return n_; }
  double h() const { return h_; }
  double u(int i) const { return u_(i); }
  double x(int i) const { return x_(i); }
  const Eigen::VectorXd& u_nodes() const { return u_; }
  const Eigen::VectorXd& x_nodes() const { return x_; }
  /// Trapezoid weights in u.
  const Eigen::VectorXd& weights() const { return w_; }

  bool same_as(const LogGrid& other) const;
  /// Stable textual identity used for cache keys and reports.
  std::string key() const;

 private:
  double u_min_, u_max_, h_;
  int n_;
  Eigen::VectorXd u_, x_, w_;
};

using GridPtr = std::shared_ptr<const LogGrid>;

GridPtr make_log_grid(double u_min = -12.0, double u_max = 6.0, int n = 512);

/// Complex samples on a shared immutable log grid.
struct HalfLineFunction {
  GridPtr grid;
  Eigen::VectorXcd values;

  HalfLineFunction() = default;
  HalfLineFunction(GridPtr g, Eigen::VectorXcd v);

  static HalfLineFunction zeros(GridPtr g);
  static HalfLineFunction sample(GridPtr g, const std::function<cplx(double)>& fx);

  int size() const { return static_cast<int>(values.size()); }
};

/// Throws GridMismatch unless f and g share a discretization.
void require_same_grid(const HalfLineFunction& f, const HalfLineFunction& g);

HalfLineFunction operator+(const HalfLineFunction& f, const HalfLineFunction& g);
HalfLineFunction operator-(const HalfLineFunction& f, const HalfLineFunction& g);
HalfLineFunction operator*(cplx c, const HalfLineFunction& f);

}  // namespace axb
