#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "../oracles/affine_matrix.hpp"
#include "axb/errors.hpp"
#include "axb/group.hpp"

using namespace axb;

TEST_SUITE("group_core") {
  TEST_CASE("multiply and inverse on fixed elements") {
    const auto p = multiply({2, 3}, {4, 5});
    CHECK(p.a == 8.0);
    CHECK(p.b == 13.0);
    const auto e = multiply({2, 3}, {0.5, -1.5});
    CHECK(e.a == 1.0);
    CHECK(e.b == 0.0);
    const auto r = multiply({3.5, -2}, {1, 0});
    CHECK(r.a == 3.5);
    CHECK(r.b == -2.0);
    CHECK(inverse({1, 0}).a == 1.0);
    CHECK(inverse({2, 3}).a == 0.5);
    CHECK(inverse({2, 3}).b == -1.5);
    CHECK(inverse({4, -8}).a == 0.25);
    CHECK(inverse({4, -8}).b == 2.0);
  }

  TEST_CASE("exp_map and factor on fixed elements") {
    const auto a = exp_map({std::log(2.0), 0.0});
    CHECK(a.a == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(a.b == 0.0);
    const auto b = exp_map({0.0, 5.0});
    CHECK(b.a == 1.0);
    CHECK(b.b == 5.0);
    const auto c = exp_map({1.0, 1.0});
    CHECK(c.a == doctest::Approx(std::numbers::e).epsilon(1e-15));
    CHECK(c.b == doctest::Approx(std::numbers::e - 1.0).epsilon(1e-15));
    CHECK(factor({1, 0}).first == 0.0);
    CHECK(factor({1, 0}).second == 0.0);
    CHECK(factor({std::numbers::e, std::numbers::e}).first == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(factor({std::numbers::e, std::numbers::e}).second == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(factor({4, 2}).first == doctest::Approx(std::log(4.0)).epsilon(1e-15));
    CHECK(factor({4, 2}).second == 0.5);
  }

  TEST_CASE("haar densities") {
    CHECK(haar_weight({1, 7}, HaarSide::left) == 1.0);
    CHECK(haar_weight({2, 0}, HaarSide::left) == 0.25);
    CHECK(haar_weight({2, 0}, HaarSide::right) == 0.5);
  }

  TEST_CASE("invalid elements are rejected") {
    CHECK_THROWS_AS(make_element(0.0, 1.0), DomainError);
    CHECK_THROWS_AS(make_element(-1.0, 1.0), DomainError);
    CHECK_THROWS_AS(make_element(1.0, std::nan("")), DomainError);
    CHECK_THROWS_AS(make_element(INFINITY, 0.0), DomainError);
  }

  TEST_CASE("agreement with the 2x2 matrix model") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> la(-2.5, 2.5), lb(-4.0, 4.0);
    for (int i = 0; i < 200; ++i) {
      const GroupElement g{std::exp(la(rng)), lb(rng)}, h{std::exp(la(rng)), lb(rng)};
      const Eigen::Matrix2d m = oracle::affine(g.a, g.b) * oracle::affine(h.a, h.b);
      const auto p = multiply(g, h);
      CHECK(std::abs(p.a - m(0, 0)) <= 1e-13 * std::abs(m(0, 0)));
      CHECK(std::abs(p.b - m(0, 1)) <= 1e-13 * (1.0 + std::abs(m(0, 1))));
      const Eigen::Matrix2d mi = oracle::affine(g.a, g.b).inverse();
      CHECK(std::abs(inverse(g).b - mi(0, 1)) <= 1e-12 * (1.0 + std::abs(mi(0, 1))));

      const double x1 = la(rng), x2 = lb(rng);
      const Eigen::Matrix2d e = oracle::matrix_exp(oracle::algebra(x1, x2));
      const auto ex = exp_map({x1, x2});
      CHECK(std::abs(ex.a - e(0, 0)) <= 1e-12 * e(0, 0));
      CHECK(std::abs(ex.b - e(0, 1)) <= 1e-12 * (1.0 + std::abs(e(0, 1))));

      // g = exp(t1 X1) exp(t2 X2) as matrices
      const auto [t1, t2] = factor(g);
      const Eigen::Matrix2d f = oracle::matrix_exp(oracle::algebra(t1, 0.0)) * oracle::matrix_exp(oracle::algebra(0.0, t2));
      CHECK(std::abs(f(0, 0) - g.a) <= 1e-12 * g.a);
      CHECK(std::abs(f(0, 1) - g.b) <= 1e-12 * (1.0 + std::abs(g.b)));
    }
  }

  TEST_CASE("log_map inverts exp_map near the identity") {
    for (double x1 : {0.0, 1e-12, -3e-9, 1e-5, 0.3, -2.0}) {
      const LieVector v = log_map(exp_map({x1, 1.75}));
      CHECK(v.x1 == doctest::Approx(x1).epsilon(1e-12));
      CHECK(v.x2 == doctest::Approx(1.75).epsilon(1e-12));
    }
  }

  TEST_CASE("bracket of the algebra: [X1, X2] = X2") {
    const Eigen::Matrix2d X1 = oracle::algebra(1, 0), X2 = oracle::algebra(0, 1);
    CHECK((X1 * X2 - X2 * X1 - X2).norm() == 0.0);
  }
}
