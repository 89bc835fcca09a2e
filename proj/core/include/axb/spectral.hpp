#pragma once

#include <functional>
#include <memory>
#include <numbers>
#include <string>
#include <vector>

#include "axb/eigensolve.hpp"
#include "axb/grid.hpp"

namespace axb {

/// Uniform nodes tau_k on [0, tau_max]; Delta corresponds to lambda = tau^2.
class SpectralGrid {
 public:
  SpectralGrid(double tau_max = 12.0, int m = 256);
  double tau_max() const { return tau_max_; }
  int m() const { return m_; }
  double dtau() const { return tau_max_ / (m_ - 1); }
  double tau(int k) const { return k * dtau(); }
  /// Trapezoid weights in tau.
  Eigen::VectorXd weights() const;
  std::string key() const;

 private:
  double tau_max_;
  int m_;
};

/// Kernel coefficients F(tau_k) of a function.
struct Spectrum {
  SpectralGrid sgrid;
  Eigen::VectorXcd coeffs;
};

/// Analytic normalization of the inverse transform, 2 / pi^2.
inline constexpr double kKlNormalization = 2.0 / (std::numbers::pi * std::numbers::pi);

/// Tabulated K_{i tau_k}(x_i) for one (grid, spectral grid) pair.
struct KernelTable {
  GridPtr grid;
  SpectralGrid sgrid;
  Eigen::MatrixXd k;  ///< n x m
  double normalization = kKlNormalization;
};

using KernelTablePtr = std::shared_ptr<const KernelTable>;

/// Builds the table directly (no cache).
KernelTablePtr build_kernel_table(GridPtr grid, const SpectralGrid& sgrid);

/// Process-wide cached table; when the AXB_CACHE_DIR environment variable names
/// a directory the table is also persisted there.
KernelTablePtr kernel_table(GridPtr grid, const SpectralGrid& sgrid);

Spectrum kl_forward(const HalfLineFunction& f, const KernelTable& table);
HalfLineFunction kl_inverse(const Spectrum& s, const KernelTable& table);

/// c * int tau sinh(pi tau) |F|^2 dtau.
double kl_energy(const Spectrum& s, double normalization);

/// Least-squares constant c minimising sum ||f - c * inverse(forward f)||^2.
double calibrate_kl_normalization(const std::vector<HalfLineFunction>& corpus, const KernelTable& table);

/// Fourier-filter parameters for the matrix Laplacian.
struct LaplacianOptions {
  double filter_strength = 0.0;
  int filter_order = 32;
  int dense_cap = 2048;
};

/// Matrix discretization of -(x d/dx)^2 + x^2 with its full eigensystem.
class DiscreteOperator {
 public:
  DiscreteOperator(GridPtr grid, SpectralDecomposition decomposition);

  const GridPtr& grid() const { return grid_; }
  const SpectralDecomposition& decomposition() const { return dec_; }
  const Eigen::VectorXd& eigenvalues() const { return dec_.eigenvalues(); }
  int size() const { return dec_.size(); }
  HalfLineFunction eigenvector(int k) const;
  Eigen::VectorXcd coefficients(const HalfLineFunction& f) const;
  HalfLineFunction synthesize(const Eigen::VectorXcd& c) const;
  /// Largest eigenvalue considered resolved by the discretization.
  double resolved_lambda() const { return resolved_lambda_; }

 private:
  GridPtr grid_;
  SpectralDecomposition dec_;
  double resolved_lambda_;
};

using OperatorPtr = std::shared_ptr<const DiscreteOperator>;

/// Filtered Fourier differentiation matrix on the periodically extended window.
Eigen::MatrixXd fourier_derivative_matrix(const LogGrid& grid, const LaplacianOptions& opt = {});

OperatorPtr build_matrix_laplacian(GridPtr grid, const LaplacianOptions& opt = {});

/// Cached per grid key.
OperatorPtr matrix_laplacian(GridPtr grid);

using Multiplier = std::function<cplx(double)>;

struct MultiplierResult {
  HalfLineFunction value;
  double unresolved_fraction = 0.0;  ///< energy share outside the resolved band
  bool unresolved = false;           ///< fraction above 1e-3
};

MultiplierResult apply_multiplier(const Multiplier& F, const HalfLineFunction& f, const DiscreteOperator& op);
MultiplierResult apply_multiplier(const Multiplier& F, const HalfLineFunction& f, const KernelTable& table);

struct SpectralMeasure {
  Eigen::VectorXd lambda;
  Eigen::VectorXd weight;
  double total() const { return weight.sum(); }
};

SpectralMeasure spectral_measure(const HalfLineFunction& f, const DiscreteOperator& op);

/// -(x d/dx)^2 f + x^2 f with a central second-difference stencil in u and zero
/// extension; meant for interior checks on non-decaying functions.
HalfLineFunction apply_laplacian_fd(const HalfLineFunction& f, int fd_order = 8);

}  // namespace axb
