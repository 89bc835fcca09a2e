#include "axb/eigensolve.hpp"

#include <lapacke.h>

#include <stdexcept>

namespace axb {

void symmetric_eigen(const Eigen::MatrixXd& s, Eigen::VectorXd& eigenvalues, Eigen::MatrixXd& eigenvectors) {
  const lapack_int n = static_cast<lapack_int>(s.rows());
  eigenvectors = 0.5 * (s + s.transpose());
  eigenvalues.resize(n);
  const lapack_int info =
      LAPACKE_dsyevd(LAPACK_COL_MAJOR, 'V', 'U', n, eigenvectors.data(), n, eigenvalues.data());
  if (info != 0) throw std::runtime_error("dsyevd failed with info " + std::to_string(info));
}

SpectralDecomposition::SpectralDecomposition(Eigen::VectorXd weights, const Eigen::MatrixXd& symmetric_form)
    : sqrt_w_(weights.cwiseSqrt()) {
  symmetric_eigen(symmetric_form, lambda_, q_);
  // Fix the sign of each eigenvector (largest component positive) for reproducible output.
  for (int k = 0; k < q_.cols(); ++k) {
    Eigen::Index imax;
    q_.col(k).cwiseAbs().maxCoeff(&imax);
    if (q_(imax, k) < 0.0) q_.col(k) *= -1.0;
  }
  const Eigen::MatrixXd back = q_ * lambda_.asDiagonal() * q_.transpose();
  const double ref = symmetric_form.norm();
  reassembly_residual_ = ref > 0.0 ? (back - 0.5 * (symmetric_form + symmetric_form.transpose())).norm() / ref : 0.0;
}

Eigen::VectorXcd SpectralDecomposition::coefficients(const Eigen::VectorXcd& f) const {
  const Eigen::VectorXcd g = sqrt_w_.cast<std::complex<double>>().cwiseProduct(f);
  Eigen::VectorXcd c(q_.cols());
  c.real() = q_.transpose() * g.real();
  c.imag() = q_.transpose() * g.imag();
  return c;
}

Eigen::VectorXcd SpectralDecomposition::synthesize(const Eigen::VectorXcd& c) const {
  Eigen::VectorXcd g(q_.rows());
  g.real() = q_ * c.real();
  g.imag() = q_ * c.imag();
  return g.cwiseQuotient(sqrt_w_.cast<std::complex<double>>());
}

Eigen::VectorXcd SpectralDecomposition::eigenvector(int k) const {
  return q_.col(k).cwiseQuotient(sqrt_w_).cast<std::complex<double>>();
}

Eigen::VectorXcd SpectralDecomposition::apply(const std::function<std::complex<double>(double)>& F,
                                              const Eigen::VectorXcd& f) const {
  Eigen::VectorXcd c = coefficients(f);
  for (int k = 0; k < c.size(); ++k) c(k) *= F(lambda_(k));
  return synthesize(c);
}

}  // namespace axb
