#include <doctest.h>

#include <cmath>

#include "axb/besov.hpp"
#include "axb/errors.hpp"
#include "axb/halfline.hpp"
#include "axb/moduli.hpp"
#include "axb/representation.hpp"
#include "common.hpp"

using namespace axb;

TEST_SUITE("moduli_besov") {
  TEST_CASE("trivial values and the 4^r bound") {
    const auto g = make_log_grid();
    const HalfLineSpace space(g);
    const auto f = testing::log_gaussian(g);
    const Eigen::VectorXcd zero = Eigen::VectorXcd::Zero(g->n());
    CHECK(modulus_mixed(space, 1, 0.0, f.values) == 0.0);
    CHECK(modulus_mixed(space, 2, 0.5, zero) == 0.0);
    CHECK(k_upper(space, 2, 0.5, zero) == 0.0);
    CHECK(k_lower(space, 2, 0.5, zero) == 0.0);
    for (int r = 1; r <= 3; ++r) {
      for (double s : {0.1, 1.0, 10.0}) CHECK(modulus_mixed(space, r, s, f.values) <= std::pow(4.0, r) * xp_norm(f));
    }
  }

  TEST_CASE("first-order modulus in direction 2 has a closed form") {
    const auto g = make_log_grid();
    const HalfLineSpace space(g);
    const auto f = testing::log_gaussian(g, 0.5, 0.8);
    const double s = 0.6;
    double ref = 0.0;
    for (double t : space.t_grid(2, s, ModulusOptions{}.max_points)) {
      const auto d = HalfLineFunction::sample(g, [t](double x) { return cplx(2.0 * std::abs(std::sin(0.5 * t * x))); });
      ref = std::max(ref, xp_norm(HalfLineFunction(g, d.values.cwiseProduct(f.values))));
    }
    CHECK(modulus_word(space, {2}, s, f.values) == doctest::Approx(ref).epsilon(1e-10));
  }

  TEST_CASE("modulus profile is nondecreasing") {
    const auto g = make_log_grid();
    const HalfLineSpace space(g);
    const auto f = testing::log_gaussian(g, -1.0, 0.7);
    const auto prof = modulus_profile(space, 2, dyadic_scales(-2, 8), f.values);
    for (std::size_t i = 1; i < prof.entries.size(); ++i) CHECK(prof.entries[i].second >= prof.entries[i - 1].second);
  }

  TEST_CASE("modulus inequalities on one function") {
    const auto g = make_log_grid();
    const HalfLineSpace space(g);
    const auto f = testing::log_gaussian(g);
    const std::vector<double> s{0.05, 0.1, 0.2, 0.4};
    const auto r1 = verify_modulus_inequalities(space, 1, 1, f.values, s);
    CHECK(r1.c1 <= 3.0);
    const auto r2 = verify_modulus_inequalities(space, 2, 1, f.values, s);
    CHECK(r2.c0 <= 3.0);
    CHECK(std::isfinite(r2.c2));
  }

  TEST_CASE("K-functional witnesses") {
    const auto g = make_log_grid();
    const HalfLineSpace space(g);
    const auto f = testing::log_gaussian(g, 0.0, 0.8);
    const double fn = xp_norm(f);
    CHECK(k_upper(space, 2, 64.0, f.values) == doctest::Approx(fn).epsilon(1e-12));
    for (double s : {std::ldexp(1.0, -8), 0.25, 4.0}) {
      const auto d = k_upper_detail(space, 2, s, f.values);
      CHECK(d.value <= d.trivial);
      CHECK(d.value <= d.sobolev);
      CHECK(k_lower(space, 2, s, f.values) / floored(d.value, fn) < 20.0);
    }
  }

  TEST_CASE("spectral K-functional on an eigenvector") {
    const auto op = testing::small_op();
    const auto v = op->eigenvector(20);
    const double lam = op->eigenvalues()(20);
    const auto m = spectral_measure(v, *op);
    double prev = 0.0;
    for (double s : {0.01, 0.1, 0.3, 1.0, 3.0}) {
      const double expect = std::min(1.0, std::pow(s, 2) * lam);
      CHECK(k_spectral(m, 2, s) == doctest::Approx(expect).epsilon(1e-10));
      CHECK(k_spectral(m, 2, s) >= prev);
      prev = k_spectral(m, 2, s);
    }
  }

  TEST_CASE("weighted scale sums") {
    const std::vector<std::pair<double, double>> core{{0.25, 1.0}, {0.5, 1.0}, {1.0, 1.0}};
    CHECK(weighted_scale_sum(core, 1.0, kInf) == doctest::Approx(4.0));
    CHECK(weighted_scale_sum(core, 1.0, 1.0) == doctest::Approx((4.0 + 2.0 + 1.0) * std::log(2.0)));
  }

  TEST_CASE("Besov norms") {
    const auto g = make_log_grid();
    const HalfLineSpace space(g);
    const Eigen::VectorXcd zero = Eigen::VectorXcd::Zero(g->n());
    CHECK(besov_norm(space, zero, {0.5, 2.0, 1}, BesovMethod::k) == 0.0);
    CHECK(besov_norm(space, zero, {0.5, 2.0, 1}, BesovMethod::modulus) == 0.0);
    CHECK_THROWS_AS(validate(BesovParams{1.5, 2.0, 1}), DomainError);
    CHECK_THROWS_AS(validate(BesovParams{0.5, 0.5, 1}), DomainError);
    CHECK_THROWS_AS(reiteration_check(space, zero, 1, 1, 2, 0.5, 2.0), DomainError);

    const auto f = testing::log_gaussian(g, 0.0, 0.8);
    for (double alpha : {0.5, 1.0, 1.5}) {
      const BesovParams p{alpha, 2.0, 2};
      const double k = besov_norm(space, f.values, p, BesovMethod::k);
      const double m = besov_norm(space, f.values, p, BesovMethod::modulus);
      CHECK(std::isfinite(k));
      CHECK(std::max(k, m) / std::min(k, m) < 50.0);
    }
    const double frac = besov_norm_fractional(space, f.values, 0.5, 2.0);
    const double mod = besov_norm(space, f.values, {0.5, 2.0, 1}, BesovMethod::modulus);
    CHECK(std::max(frac, mod) / std::min(frac, mod) < 50.0);
    CHECK(std::isfinite(zygmund_norm(space, f.values, 1, 2.0)));
  }

  TEST_CASE("reiteration report is finite") {
    const auto g = make_log_grid();
    const HalfLineSpace space(g);
    const auto f = HalfLineFunction::sample(g, [](double x) { return cplx(testing::xe(x)); });
    const auto rep = reiteration_check(space, f.values, 0, 1, 2, 0.5, 2.0);
    CHECK(std::isfinite(rep.ratio));
    CHECK(std::isfinite(rep.gn_constant));
    const auto rep2 = reiteration_check(space, f.values, 1, 2, 2, 1.5, 2.0);
    CHECK(std::isfinite(rep2.gn_constant));
    CHECK(std::isfinite(rep2.ratio));
    CHECK(rep2.ratio < 50.0);
  }
}
