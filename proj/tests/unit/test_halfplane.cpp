#include <doctest.h>

#include <cmath>

#include "axb/errors.hpp"
#include "axb/halfplane.hpp"

using namespace axb;

namespace {

PlaneGridPtr small_plane() {
  static const PlaneGridPtr g = make_halfplane_grid(24, 24);
  return g;
}

double integrate_1d(double lo, double hi, const std::function<double(double)>& fn) {
  const int n = 20000;
  const double h = (hi - lo) / n;
  double acc = 0.5 * (fn(lo) + fn(hi));
  for (int i = 1; i < n; ++i) acc += fn(lo + i * h);
  return acc * h;
}

}  // namespace

TEST_SUITE("halfplane_reps") {
  TEST_CASE("grid capacity") {
    CHECK_THROWS_AS(make_halfplane_grid(80, 80), CapacityError);
    CHECK(make_halfplane_grid()->size() == 48 * 48);
  }

  TEST_CASE("norms") {
    const auto g = make_halfplane_grid();
    const auto zero = HalfPlaneFunction::sample(g, [](double, double) { return cplx(0.0); });
    CHECK(lp_norm_2d(zero, 2.0, Side::left) == 0.0);

    // separable e^{-(ln x)^2} e^{-y^2}: the right norm is a product of 1-D integrals in (u, y)
    const auto f = HalfPlaneFunction::sample(
        g, [](double x, double y) { return cplx(std::exp(-std::pow(std::log(x), 2) - y * y)); });
    const double iu = integrate_1d(-6, 6, [](double u) { return std::exp(-2 * u * u); });
    const double iy = integrate_1d(-8, 8, [](double y) { return std::exp(-2 * y * y); });
    CHECK(lp_norm_2d(f, 2.0, Side::right) == doctest::Approx(std::sqrt(iu * iy)).epsilon(1e-8));
    // the left measure carries an extra 1/x = e^{-u}
    const double iul = integrate_1d(-6, 6, [](double u) { return std::exp(-2 * u * u - u); });
    CHECK(lp_norm_2d(f, 2.0, Side::left) == doctest::Approx(std::sqrt(iul * iy)).epsilon(1e-8));
  }

  TEST_CASE("actions") {
    const auto g = make_halfplane_grid();
    const auto f = plane_gaussian(g, 0.0, 1.0, 0.0, 1.0);
    for (Side side : {Side::left, Side::right}) {
      const auto id = act_2d({1.0, 0.0}, f, side);
      CHECK((id.values - f.values).norm() == 0.0);
    }
    const double n_left = lp_norm_2d(f, 2.0, Side::left);
    const auto shifted = act_2d({1.0, 2 * g->h_y()}, f, Side::left);
    CHECK(std::abs(lp_norm_2d(shifted, 2.0, Side::left) - n_left) < 1e-10 * n_left);
    const double n_right = lp_norm_2d(f, 2.0, Side::right);
    const auto dil = act_2d({std::exp(g->u_axis().h()), 0.0}, f, Side::right);
    CHECK(std::abs(lp_norm_2d(dil, 2.0, Side::right) - n_right) < 1e-10 * n_right);
    for (Side side : {Side::left, Side::right}) CHECK(isometry_defects(f, side).max_defect < 1e-10);
  }

  TEST_CASE("generators and commutators") {
    // 64 x 64 on a narrower window: h_u = 0.127, h_y = 0.19
    const auto g = make_halfplane_grid(64, 64, -4.0, 4.0, -6.0, 6.0);
    // D1 on x^2 v(y) gives 2 x^2 v(y) on the right
    const auto sq = HalfPlaneFunction::sample(g, [](double x, double y) { return cplx(x * x * std::exp(-y * y)); });
    const auto d1 = generator_2d(1, sq, Side::right);
    CHECK(interior_residual_2d(*g, d1.values, 2.0 * sq.values, 6) < 1e-6);

    const auto f = plane_gaussian(g, 0.5, 0.8, 1.0, 1.2);
    CHECK(commutator_check(Side::right, f).forced_residual < 1e-6);
    CHECK(commutator_check(Side::left, f, 12).forced_residual < 1e-6);
    CHECK(commutator_check(Side::left, f).stated_residual > 1e-3);
  }

  TEST_CASE("mixed modulus") {
    const auto g = small_plane();
    const auto f = plane_gaussian(g, 0.0, 1.0, 0.0, 1.0);
    const double n = lp_norm_2d(f, 2.0, Side::left);
    CHECK(modulus_mixed_2d(1, 0.0, f, 2.0, Side::left) == 0.0);
    for (int r : {1, 2}) CHECK(modulus_mixed_2d(r, 1.0, f, 2.0, Side::left) <= std::pow(4.0, r) * n);

    // left direction 2 is a pure y-shift: compare with the 1-D computation on the samples
    const HalfPlaneSpace space(g, Side::left);
    const double s = 3.0 * g->h_y();
    const auto ts = space.t_grid(2, s, 32);
    double ref = 0.0;
    for (double t : ts) {
      const int k = static_cast<int>(std::lround(t / g->h_y()));
      Eigen::VectorXcd d = -f.values;
      for (int iu = 0; iu < g->n_u(); ++iu) {
        for (int iy = 0; iy + k < g->n_y(); ++iy) d(g->index(iu, iy)) += f.values(g->index(iu, iy + k));
      }
      ref = std::max(ref, space.norm(d));
    }
    CHECK(modulus_word(space, {2}, s, f.values) == doctest::Approx(ref).epsilon(1e-10));
  }

  TEST_CASE("assembled Laplacians") {
    const auto g = small_plane();
    std::vector<HalfPlaneFunction> corpus;
    for (const auto& e : default_plane_corpus()) corpus.push_back(plane_gaussian(g, e.u0, e.su, e.y0, e.sy));
    for (Side side : {Side::left, Side::right}) {
      const auto lap = laplacian_2d(side, g);
      CHECK(lap->min_eigenvalue() > -1e-8);
      const auto rep = sobolev_graph_check(corpus, 1, *lap);
      CHECK(rep.finite);
      const Eigen::VectorXcd one = lap->power(1.0, corpus[0].values);
      CHECK((one - lap->apply(corpus[0].values)).norm() < 1e-8 * one.norm());
    }
  }

  TEST_CASE("right expanded Laplacian on y-independent data") {
    const auto g = make_halfplane_grid();
    const auto f = HalfPlaneFunction::sample(g, [](double x, double) { return cplx(std::exp(-0.5 * std::pow(std::log(x), 2))); });
    // -(x d/dx)^2 e^{-u^2/2} = (1 - u^2) e^{-u^2/2}
    const auto ref = HalfPlaneFunction::sample(g, [](double x, double) {
      const double u = std::log(x);
      return cplx((1.0 - u * u) * std::exp(-0.5 * u * u));
    });
    CHECK(interior_residual_2d(*g, expanded_laplacian(Side::right, *g, f.values), ref.values, 6) < 1e-4);
  }
}
