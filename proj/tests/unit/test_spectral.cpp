#include <doctest.h>

#include <cmath>
#include <numbers>

#include "../oracles/gamma_series.hpp"
#include "axb/errors.hpp"
#include "axb/halfline.hpp"
#include "axb/macdonald.hpp"
#include "axb/spectral.hpp"
#include "common.hpp"

using namespace axb;

TEST_SUITE("spectral_engine") {
  TEST_CASE("K_0 against reference values") {
    CHECK(macdonald_kernel(0.0, 1.0) == doctest::Approx(0.4210244382).epsilon(1e-10));
    for (double x : {0.05, 0.3, 1.0, 2.5, 7.0, 20.0}) {
      CHECK(macdonald_kernel(0.0, x) == doctest::Approx(std::cyl_bessel_k(0.0, x)).epsilon(1e-11));
    }
    CHECK_THROWS_AS(macdonald_kernel(1.0, 0.0), DomainError);
    CHECK_THROWS_AS(macdonald_kernel(1.0, -2.0), DomainError);
  }

  TEST_CASE("imaginary order against the power series") {
    for (double tau : {0.5, 1.0, 2.0, 5.0}) {
      for (double x : {0.05, 0.2, 0.7, 1.5, 3.0}) {
        const double ref = oracle::macdonald_series(tau, x);
        CHECK(std::abs(macdonald_kernel(tau, x) - ref) < 1e-10 * oracle::series_scale(tau));
      }
    }
  }

  TEST_CASE("large-x decay bound") {
    for (double x : {10.0, 30.0, 80.0}) {
      const double bound = std::sqrt(std::numbers::pi / (2.0 * x)) * std::exp(-x);
      for (double tau : {0.0, 1.0, 4.0}) CHECK(std::abs(macdonald_kernel(tau, x)) <= bound * (1.0 + 1e-12));
    }
  }

  TEST_CASE("row evaluation matches pointwise values") {
    const Eigen::VectorXd row = macdonald_row(0.8, 0.05, 200);
    for (int k : {0, 17, 120, 199}) CHECK(row(k) == doctest::Approx(macdonald_kernel(0.05 * k, 0.8)).epsilon(1e-10));
  }

  TEST_CASE("kernel transform: zero, Parseval and a localized spectrum") {
    const auto g = make_log_grid();
    const auto table = kernel_table(g, SpectralGrid());
    const auto zero = kl_forward(HalfLineFunction::zeros(g), *table);
    CHECK(zero.coeffs.norm() == 0.0);

    const auto f = testing::log_gaussian(g, 0.0, 1.0);
    const double e = kl_energy(kl_forward(f, *table), table->normalization);
    CHECK(std::abs(e - std::pow(xp_norm(f), 2)) < 1e-3 * std::pow(xp_norm(f), 2));

    // spectrum concentrated near tau0 round-trips to a peak at tau0
    const SpectralGrid sg;
    const double tau0 = 4.0;
    Spectrum bump{sg, Eigen::VectorXcd(sg.m())};
    for (int k = 0; k < sg.m(); ++k) bump.coeffs(k) = std::exp(-std::pow((sg.tau(k) - tau0) / 0.4, 2));
    const auto back = kl_forward(kl_inverse(bump, *table), *table);
    int peak = 0;
    back.coeffs.cwiseAbs().maxCoeff(&peak);
    CHECK(std::abs(sg.tau(peak) - tau0) <= sg.dtau());
  }

  TEST_CASE("matrix Laplacian: spectrum, ground state and identity multiplier") {
    const auto op = testing::small_op();
    CHECK(op->eigenvalues().minCoeff() >= -1e-10);
    CHECK(op->decomposition().reassembly_residual() < 1e-10);
    const auto v0 = op->eigenvector(0);
    int at = 0;
    const double peak = v0.values.cwiseAbs().maxCoeff(&at);
    const double sign = v0.values(at).real() > 0 ? 1.0 : -1.0;
    // sign-definite away from the far tail, where only wrap-around ripple is left
    const auto& g = *testing::small_grid();
    double neg = 0.0;
    for (int i = 0; i < op->size(); ++i) {
      const double v = sign * v0.values(i).real();
      if (g.x(i) < 8.0) CHECK(v >= -1e-8 * peak);
      if (v < 0.0) neg = std::max(neg, -v);
    }
    CHECK(neg < 1e-4 * peak);
    CHECK(op->eigenvalues()(0) > 0.03);

    const auto f = testing::log_gaussian(testing::small_grid(), -1.0, 0.7);
    const auto one = apply_multiplier([](double) { return cplx(1.0); }, f, *op);
    CHECK(xp_norm(one.value - f) < 1e-12 * xp_norm(f));
  }

  TEST_CASE("multipliers compose") {
    const auto op = testing::small_op();
    const auto f = testing::log_gaussian(testing::small_grid());
    const Multiplier F = [](double l) { return cplx(std::exp(-0.3 * l)); };
    const Multiplier G = [](double l) { return cplx(1.0 / (1.0 + l), 0.2 * l); };
    const auto fg = apply_multiplier([&](double l) { return F(l) * G(l); }, f, *op).value;
    const auto chained = apply_multiplier(F, apply_multiplier(G, f, *op).value, *op).value;
    CHECK(xp_norm(fg - chained) < 1e-12 * xp_norm(fg));
  }

  TEST_CASE("spectral measure") {
    const auto op = testing::small_op();
    const auto v = op->eigenvector(11);
    const auto m = spectral_measure(v, *op);
    CHECK(m.weight(11) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(m.total() == doctest::Approx(1.0).epsilon(1e-12));

    const auto f = testing::log_gaussian(testing::small_grid(), 0.5, 0.6);
    CHECK(spectral_measure(f, *op).total() == doctest::Approx(std::pow(xp_norm(f), 2)).epsilon(1e-12));

    const auto band = apply_multiplier([](double l) { return cplx(l <= 9.0 ? 1.0 : 0.0); }, f, *op).value;
    const auto mb = spectral_measure(band, *op);
    double outside = 0.0;
    for (int k = 0; k < mb.lambda.size(); ++k) {
      if (mb.lambda(k) > 9.0) outside += mb.weight(k);
    }
    CHECK(outside < 1e-10 * mb.total());
  }

  TEST_CASE("finite-difference Laplacian reproduces the matrix operator on smooth data") {
    const auto g = make_log_grid();
    const auto op = matrix_laplacian(g);
    const auto f = testing::log_gaussian(g, 0.0, 1.0);
    const auto ref = apply_multiplier([](double l) { return cplx(l); }, f, *op).value;
    const auto [lo, hi] = interior_range(*g);
    CHECK(interior_rel_residual(apply_laplacian_fd(f).values, ref.values, lo, hi) < 1e-6);
  }

  TEST_CASE("dense eigensolves refuse oversize grids") {
    CHECK_THROWS_AS(build_matrix_laplacian(make_log_grid(-12, 6, 4096)), CapacityError);
  }
}
