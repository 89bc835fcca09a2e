#pragma once

#include <Eigen/Dense>
#include <complex>
#include <functional>

namespace axb {

/// Dense real symmetric eigensolve (divide and conquer). Eigenvalues ascending.
void symmetric_eigen(const Eigen::MatrixXd& s, Eigen::VectorXd& eigenvalues, Eigen::MatrixXd& eigenvectors);

/// Eigensystem of an operator that is Hermitian for the weighted inner product
/// <f, g> = sum_i w_i f_i conj(g_i). Built from the symmetric similarity
/// S = W^{1/2} A W^{-1/2}; the eigenvectors V = W^{-1/2} Q are W-orthonormal.
class SpectralDecomposition {
 public:
  SpectralDecomposition() = default;
  SpectralDecomposition(Eigen::VectorXd weights, const Eigen::MatrixXd& symmetric_form);

  int size() const { return static_cast<int>(lambda_.size()); }
  const Eigen::VectorXd& eigenvalues() const { return lambda_; }
  const Eigen::MatrixXd& q() const { return q_; }
  const Eigen::VectorXd& sqrt_weights() const { return sqrt_w_; }
  /// Relative Frobenius residual of Q diag(lambda) Q^T against S.
  double reassembly_residual() const { return reassembly_residual_; }

  /// Coefficients <f, v_k> in the weighted inner product.
  Eigen::VectorXcd coefficients(const Eigen::VectorXcd& f) const;
  Eigen::VectorXcd synthesize(const Eigen::VectorXcd& c) const;
  /// k-th eigenvector sampled on the grid.
  Eigen::VectorXcd eigenvector(int k) const;

  Eigen::VectorXcd apply(const std::function<std::complex<double>(double)>& F, const Eigen::VectorXcd& f) const;

 private:
  Eigen::VectorXd lambda_;
  Eigen::MatrixXd q_;
  Eigen::VectorXd sqrt_w_;
  double reassembly_residual_ = 0.0;
};

}  // namespace axb
