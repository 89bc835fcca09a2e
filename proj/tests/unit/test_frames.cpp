#include <doctest.h>

#include <cmath>

#include "axb/besov.hpp"
#include "axb/frames.hpp"
#include "axb/halfline.hpp"
#include "common.hpp"

using namespace axb;

TEST_SUITE("frames_lp") {
  TEST_CASE("cutoff shape") {
    CHECK(partition_g(0.0) == 1.0);
    CHECK(partition_g(1.0) == 1.0);
    CHECK(partition_g(2.0) == 0.0);
    CHECK(partition_g(5.0) == 0.0);
    double prev = 1.0;
    for (double x = 1.0; x <= 2.0; x += 0.01) {
      CHECK(partition_g(x) <= prev);
      CHECK(partition_g(x) >= 0.0);
      prev = partition_g(x);
    }
    CHECK(partition_h(0.49) == 0.0);
    CHECK(partition_h(2.01) == 0.0);
  }

  TEST_CASE("partition values") {
    const DyadicPartition part(6);
    for (double lam : {0.0, 0.3, 1.0}) {
      const auto v = part.values(lam);
      CHECK(v[0] == 1.0);
      for (int j = 1; j <= 6; ++j) CHECK(v[j] == 0.0);
    }
    CHECK(std::abs(part.partial_sum(3.7) - 1.0) < 1e-15);
    for (int j = 1; j <= 6; ++j) {
      const auto [lo, hi] = band_support(j);
      CHECK(part.q(j, 0.999 * lo) == 0.0);
      CHECK(part.q(j, 1.001 * hi) == 0.0);
      CHECK(part.q(j, 1.5 * std::ldexp(1.0, j - 1) * 1.0) > 0.0);
    }
    for (double lam : {0.5, 3.0, 17.0, 300.0}) CHECK(part.f(2, lam) == doctest::Approx(std::sqrt(part.q(2, lam))));
  }

  TEST_CASE("Littlewood-Paley decomposition") {
    const auto op = testing::small_op();
    const int J = covering_index(*op, BandAxis::lambda);
    const auto f = testing::log_gaussian(testing::small_grid(), 0.5, 0.8);
    const double f2 = std::pow(xp_norm(f), 2);
    const auto d = lp_decompose(f, J, *op);
    double acc = 0.0;
    for (const auto& b : d.bands) acc += std::pow(xp_norm(b), 2);
    CHECK(std::abs(acc - f2) < 1e-10 * f2);
    CHECK(xp_norm(f - lp_reconstruct(f, J, *op)) < 1e-10 * xp_norm(f));
    CHECK_FALSE(d.unresolved);

    const auto bn = band_norms(spectral_measure(f, *op), J, BandAxis::lambda);
    for (int j = 0; j <= J; ++j) CHECK(bn[j] == doctest::Approx(xp_norm(d.bands[j])).epsilon(1e-10).scale(1e-14));
  }

  TEST_CASE("a single eigenvector only touches neighbouring bands") {
    const auto op = testing::small_op();
    const int J = covering_index(*op, BandAxis::lambda);
    int k = 0;
    while (op->eigenvalues()(k) < 12.0) ++k;  // lambda in (8, 16) lies in bands 3 and 4
    const auto v = op->eigenvector(k);
    const auto d = lp_decompose(v, J, *op);
    for (int j = 0; j <= J; ++j) {
      if (j != 3 && j != 4) CHECK(xp_norm(d.bands[j]) < 1e-12);
    }
  }

  TEST_CASE("band frames") {
    const auto op = testing::small_op();
    const auto fr = build_band_frame(4, *op);
    REQUIRE_FALSE(fr.empty);
    CHECK(fr.a == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(fr.b == doctest::Approx(1.0).epsilon(1e-12));
    CHECK((fr.dual - fr.atoms).norm() < 1e-12);

    const auto red = build_band_frame(4, *op, BandAxis::lambda, FrameKind::redundant);
    CHECK(red.a == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(red.b == doctest::Approx(2.0).epsilon(1e-12));

    // tight frame: sum |<f, Phi_k>|^2 = ||P_band f||^2
    const auto f = testing::log_gaussian(testing::small_grid());
    const Eigen::VectorXcd c = op->coefficients(f);
    Eigen::VectorXcd band(fr.index.size());
    for (std::size_t i = 0; i < fr.index.size(); ++i) band(i) = c(fr.index[i]);
    CHECK(band_coefficient_energy(c, fr) == doctest::Approx(band.squaredNorm()).epsilon(1e-12));
  }

  TEST_CASE("analysis and synthesis") {
    const auto op = testing::small_op();
    const int J = covering_index(*op, BandAxis::lambda);
    const auto frames = build_frames(J, *op);
    const auto zero = HalfLineFunction::zeros(testing::small_grid());
    for (const auto& c : frame_analysis(zero, frames, *op)) CHECK(c.norm() == 0.0);

    const auto f = testing::log_gaussian(testing::small_grid(), -1.0, 0.7);
    const auto coeffs = frame_analysis(f, frames, *op);
    double energy = 0.0;
    for (const auto& c : coeffs) energy += c.squaredNorm();
    const double f2 = std::pow(xp_norm(f), 2);
    CHECK(std::abs(energy - f2) < 1e-10 * f2);
    CHECK(xp_norm(f - frame_synthesis(coeffs, frames, *op)) < 1e-10 * xp_norm(f));

    const auto red = build_frames(J, *op, BandAxis::lambda, FrameKind::redundant);
    CHECK(xp_norm(f - frame_synthesis(frame_analysis(f, red, *op), red, *op)) < 1e-10 * xp_norm(f));
    const auto fb = frame_bounds(red, *op);
    CHECK(fb.a == doctest::Approx(2.0).epsilon(1e-12));
    CHECK_FALSE(fb.coverage_gap);
  }

  TEST_CASE("band Besov norms") {
    const auto op = testing::small_op();
    const auto zero = HalfLineFunction::zeros(testing::small_grid());
    for (auto v : {BandVariant::approx, BandVariant::projections, BandVariant::frames}) {
      CHECK(besov_norm_bands(zero, 0.5, 2.0, v, *op) == 0.0);
    }
    // eigenvector with sqrt(lambda) = 6 sits in root-axis bands 2 and 3
    int k = 0;
    while (std::sqrt(op->eigenvalues()(k)) < 6.0) ++k;
    const auto v = op->eigenvector(k);
    const double alpha = 1.0;
    for (auto var : {BandVariant::projections, BandVariant::frames}) {
      const double n = besov_norm_bands(v, alpha, 2.0, var, *op);
      CHECK(n >= std::pow(2.0, 2 * alpha) * 0.5);
      CHECK(n <= std::pow(2.0, 3 * alpha) * 2.0);
    }
    const auto f = testing::log_gaussian(testing::small_grid());
    for (double q : {1.0, 2.0, kInf}) {
      const double a = besov_norm_bands(f, 0.7, q, BandVariant::approx, *op);
      const double p = besov_norm_bands(f, 0.7, q, BandVariant::projections, *op);
      const double fr = besov_norm_bands(f, 0.7, q, BandVariant::frames, *op);
      // ||F_j f|| never exceeds the norm of the unweighted band projection
      CHECK(p <= fr * (1.0 + 1e-12));
      CHECK(std::max(a, p) / std::min(a, p) < 50.0);
    }
  }

  TEST_CASE("approximation spaces and the direct/inverse report") {
    const auto op = testing::small_op();
    const auto bl = bandlimited_random(*op, 3.0, 6, 3);
    std::vector<double> scales;
    for (int j = -4; j <= 8; ++j) scales.push_back(std::ldexp(1.0, j));
    CHECK(std::isfinite(approx_space_norm(bl, 0.5, 2.0, scales, *op)));
    const auto f = testing::log_gaussian(testing::small_grid());
    const auto rep = direct_inverse_check({f, bl}, 0.5, 2.0, 2, *op);
    CHECK(std::isfinite(rep.jackson_constant));
    CHECK(rep.ratio_min > 0.0);
    CHECK(std::isfinite(rep.ratio_max));
  }
}
