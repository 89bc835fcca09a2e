#include <doctest.h>

#include <cmath>
#include <numbers>

#include "axb/errors.hpp"
#include "axb/halfline.hpp"
#include "common.hpp"

using namespace axb;
using testing::sample;

TEST_SUITE("halfline_space") {
  TEST_CASE("norms against Gamma integrals") {
    const auto g = make_log_grid();
    CHECK(xp_norm(HalfLineFunction::zeros(g)) == 0.0);
    // int x^2 e^{-2x} dx / x = 1/4
    CHECK(xp_norm(sample(g, testing::xe)) == doctest::Approx(0.5).epsilon(1e-9));
    // int x^3 e^{-2x} dx / x = 2 / 8
    const cplx ip = inner(sample(g, testing::xe), sample(g, testing::x2e));
    CHECK(ip.real() == doctest::Approx(0.25).epsilon(1e-9));
    CHECK(std::abs(ip.imag()) < 1e-15);
    // p = 1: int e^{-x} dx over the window [e^{-12}, e^6]
    const double window = std::exp(-std::exp(-12.0)) - std::exp(-std::exp(6.0));
    CHECK(xp_norm(sample(g, testing::xe), 1.0) == doctest::Approx(window).epsilon(1e-9));
    CHECK_THROWS_AS(xp_norm(sample(g, testing::xe), 0.5), DomainError);
  }

  TEST_CASE("indicator weighted by x^{1/p} has the plain L^p norm of the indicator") {
    const auto g = make_log_grid(-4.0, 4.0, 801);
    for (double p : {1.0, 2.0, 3.0}) {
      // support [e^{-1}, e]; the jump costs O(h)
      const auto f = HalfLineFunction::sample(
          g, [p](double x) { return cplx(std::abs(std::log(x)) <= 1.0 + 1e-12 ? std::pow(x, 1.0 / p) : 0.0); });
      const double plain = std::pow(std::numbers::e - 1.0 / std::numbers::e, 1.0 / p);
      CHECK(std::abs(xp_norm(f, p) - plain) < 2.0 * g->h() * plain);
    }
  }

  TEST_CASE("inner product is Hermitian and matches the norm") {
    const auto g = make_log_grid();
    const auto f = HalfLineFunction::sample(g, [](double x) { return cplx(x * std::exp(-x), std::sin(x) * std::exp(-x)); });
    const auto h = testing::log_gaussian(g, 1.0, 0.5);
    CHECK(std::abs(inner(f, h) - std::conj(inner(h, f))) < 1e-15);
    CHECK(std::abs(inner(f, f).real() - std::pow(xp_norm(f), 2)) < 1e-12 * inner(f, f).real());
  }

  TEST_CASE("mismatched grids are rejected") {
    const auto f = sample(make_log_grid(-12, 6, 512), testing::xe);
    const auto h = sample(make_log_grid(-12, 6, 256), testing::xe);
    CHECK_THROWS_AS(inner(f, h), GridMismatch);
    CHECK_THROWS_AS(f - h, GridMismatch);
  }

  TEST_CASE("action of simple elements") {
    const auto g = make_log_grid();
    const auto f = testing::log_gaussian(g, 0.5, 0.8);
    const auto mod = act({1.0, std::numbers::pi}, f);
    for (int i = 0; i < g->n(); ++i) CHECK(mod.values(i) == std::polar(1.0, std::numbers::pi * g->x(i)) * f.values(i));
    CHECK(xp_norm(act({1.0, 0.0}, f) - f) == 0.0);
    CHECK(xp_norm(act_dilation(0.0, f) - f) == 0.0);
    for (int k : {1, 5, -7}) {
      const auto moved = act({std::exp(k * g->h()), 0.3}, f);
      CHECK(std::abs(xp_norm(moved) - xp_norm(f)) < 1e-10 * xp_norm(f));
    }
  }

  TEST_CASE("modulations compose exactly") {
    const auto g = make_log_grid();
    const auto f = testing::log_gaussian(g);
    const auto ab = act_modulation(0.7, act_modulation(-1.9, f));
    CHECK(xp_norm(ab - act_modulation(-1.2, f)) < 1e-14 * xp_norm(f));
  }

  TEST_CASE("homomorphism on grid-compatible dilations") {
    const auto g = make_log_grid();
    const auto f = testing::log_gaussian(g, -1.0, 0.8);
    const double t = 3 * g->h(), tau = 0.9;
    const GroupElement d{std::exp(t), 0.0}, m{1.0, tau};
    const auto lhs = act(d, act(m, f));
    const auto rhs = act(multiply(d, m), f);
    CHECK(xp_norm(lhs - rhs) < 1e-10 * xp_norm(f));
  }

  TEST_CASE("generators on closed forms") {
    const auto g = make_log_grid();
    const auto sq = HalfLineFunction::sample(g, [](double x) { return cplx(x * x); });
    const auto [lo, hi] = interior_range(*g);
    CHECK(interior_rel_residual(generator(1, sq).values, 2.0 * sq.values, lo, hi) < 1e-8);

    const auto e = HalfLineFunction::sample(g, [](double x) { return cplx(std::exp(-x)); });
    const auto d2 = generator(2, e);
    for (int i = 0; i < g->n(); ++i) CHECK(d2.values(i) == cplx(0.0, g->x(i)) * e.values(i));

    // [D1, D2] f = D2 f
    const auto comm = generator(1, generator(2, e)) - generator(2, generator(1, e));
    CHECK(interior_rel_residual(comm.values, generator(2, e).values, lo, hi) < 1e-6);
  }

  TEST_CASE("Sobolev norm of x e^{-x}") {
    const auto g = make_log_grid();
    const auto f = sample(g, testing::xe);
    CHECK(sobolev_norm(f, 0) == doctest::Approx(xp_norm(f)).epsilon(1e-15));
    // ||x f'||^2 = 1/8 and ||x f||^2 = 3/8
    const double expect = 0.5 + std::sqrt(0.125) + std::sqrt(0.375);
    CHECK(sobolev_norm(f, 1) == doctest::Approx(expect).epsilon(1e-8));
  }

  TEST_CASE("full and top-order Sobolev norms are comparable") {
    const auto g = make_log_grid();
    for (const auto& e : default_corpus()) {
      if (!e.decaying) continue;
      const auto f = realize(e, g);
      for (int m = 1; m <= 3; ++m) {
        const double ratio = sobolev_norm(f, m) / sobolev_norm_top(f, m);
        CHECK(ratio >= 1.0);
        CHECK(ratio <= 3.0 + std::pow(2.0, m));
      }
    }
  }

  TEST_CASE("words enumerate in lexicographic order") {
    const auto w = all_words(2);
    REQUIRE(w.size() == 4);
    CHECK(w[0] == DirectionWord{1, 1});
    CHECK(w[1] == DirectionWord{1, 2});
    CHECK(w[3] == DirectionWord{2, 2});
  }
}
