#include <doctest.h>

#include <cmath>

#include "axb/corpus.hpp"
#include "axb/errors.hpp"
#include "axb/halfline.hpp"
#include "axb/paley_wiener.hpp"
#include "axb/representation.hpp"
#include "common.hpp"

using namespace axb;

TEST_SUITE("paley_wiener") {
  TEST_CASE("band limits must be positive") {
    CHECK_THROWS_AS(BandLimit(0.0), DomainError);
    CHECK_THROWS_AS(BandLimit(-1.0), DomainError);
    CHECK(BandLimit(2.5).omega == 2.5);
  }

  TEST_CASE("projection is idempotent, self-adjoint and fixes its range") {
    const auto op = testing::small_op();
    const auto g = testing::small_grid();
    const auto f = testing::log_gaussian(g, 0.0, 1.0);
    const auto h = testing::log_gaussian(g, 1.0, 0.5);
    const BandLimit b(3.0);
    const auto pf = pw_project(b, f, *op);
    CHECK(xp_norm(pw_project(b, pf, *op) - pf) < 1e-12 * xp_norm(pf));
    CHECK(std::abs(inner(pf, h) - inner(f, pw_project(b, h, *op))) < 1e-12 * xp_norm(f) * xp_norm(h));
    const auto bl = bandlimited_random(*op, 3.0, 8, 5);
    CHECK(xp_norm(pw_project(b, bl, *op) - bl) < 1e-12);
  }

  TEST_CASE("best approximation") {
    const auto op = testing::small_op();
    const int k = 15;
    const auto v = op->eigenvector(k);
    const double root = std::sqrt(op->eigenvalues()(k));
    CHECK(best_approx(root * 1.001, v, *op) < 1e-12);
    CHECK(best_approx(root * 0.999, v, *op) == doctest::Approx(1.0).epsilon(1e-12));

    const auto f = testing::log_gaussian(testing::small_grid());
    const SpectralProfile prof(spectral_measure(f, *op));
    double prev = INFINITY;
    for (double s = 0.25; s < 200.0; s *= 1.5) {
      const double e = prof.best_approx(s);
      CHECK(e <= prev);
      CHECK(e == doctest::Approx(best_approx(s, f, *op)).epsilon(1e-8).scale(1e-12));
      prev = e;
    }
    CHECK(prof.best_approx(std::sqrt(op->eigenvalues().maxCoeff()) * 1.01) == 0.0);
  }

  TEST_CASE("Bernstein ratios") {
    const auto op = testing::small_op();
    const int k = 30;
    const auto v = op->eigenvector(k);
    const double root = std::sqrt(op->eigenvalues()(k));
    for (double s : {1.0, 2.0, 3.0}) {
      CHECK(bernstein_check(v, 2.0 * root, s, *op).ratio == doctest::Approx(std::pow(0.5, s)).epsilon(1e-10));
    }
    const auto f = bandlimited_random(*op, 4.0, 10, 2);
    CHECK(bernstein_check(f, 4.0, 0.0, *op).ratio == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(bernstein_check(f, 4.0, 2.0, *op).ratio <= 1.0 + 1e-8);
  }

  TEST_CASE("scalar Riesz-Boas series") {
    for (double tau : {0.3, 1.0, 1.9}) {
      double prev = INFINITY;
      for (int K : {8, 16, 32, 64, 128}) {
        const double err = std::abs(riesz_boas_scalar(2.0, tau, K) - cplx(0.0, tau));
        CHECK(err < prev);
        prev = err;
      }
      CHECK(prev < 1e-2 * tau);
    }
  }

  TEST_CASE("Riesz-Boas on functions") {
    const auto op = testing::small_op();
    const auto zero = HalfLineFunction::zeros(testing::small_grid());
    const auto rz = riesz_boas(3.0, zero, 32, *op);
    CHECK(xp_norm(rz.series) == 0.0);
    CHECK(rz.error == 0.0);

    const auto f = bandlimited_random(*op, 3.0, 8, 9);
    double prev = INFINITY;
    for (int K : {8, 16, 32, 64, 128}) {
      const auto rb = riesz_boas(3.0, f, K, *op);
      CHECK(rb.error < prev);
      CHECK(rb.error <= rb.tail_bound);
      prev = rb.error;
    }
  }

  TEST_CASE("Schrodinger modulus") {
    const auto op = testing::small_op();
    const int k = 12;
    const auto v = op->eigenvector(k);
    const double lam = op->eigenvalues()(k);
    const auto m = spectral_measure(v, *op);
    CHECK(schrodinger_modulus(2, 0.0, m) == 0.0);
    for (int r : {1, 2}) {
      for (double t : {0.01, 0.05, 1.0}) {
        double ref = 0.0;
        for (int i = 1; i <= 64; ++i) ref = std::max(ref, std::pow(2.0 * std::abs(std::sin(0.5 * t * i / 64.0 * lam)), r));
        CHECK(schrodinger_modulus(r, t, m) == doctest::Approx(ref).epsilon(1e-10));
        CHECK(schrodinger_modulus(r, t, m) <= std::pow(2.0, r) * (1.0 + 1e-12));
      }
    }
  }

  TEST_CASE("Jackson ratios") {
    const auto op = testing::small_op();
    const HalfLineSpace space(testing::small_grid());
    const auto bl = bandlimited_random(*op, 2.0, 6, 4);
    const auto rep = jackson_check({2.0, 4.0, 8.0}, 2, {bl}, *op, space);
    for (const auto& row : rep.rows) CHECK(row.best < 1e-12);
    const auto f = testing::log_gaussian(testing::small_grid());
    const auto rep2 = jackson_check({0.5, 1.0, 2.0, 4.0, 8.0}, 2, {f}, *op, space);
    CHECK(std::isfinite(rep2.c_hat));
    for (const auto& row : rep2.rows) CHECK(std::isfinite(row.ratio));
  }
}
