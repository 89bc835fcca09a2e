#pragma once

#include <cmath>
#include <complex>

#include "axb/corpus.hpp"
#include "axb/grid.hpp"
#include "axb/spectral.hpp"

namespace testing {

inline axb::GridPtr small_grid() {
  static const axb::GridPtr g = axb::make_log_grid(-12.0, 6.0, 256);
  return g;
}

inline axb::OperatorPtr small_op() { return axb::matrix_laplacian(small_grid()); }

inline axb::HalfLineFunction sample(const axb::GridPtr& g, double (*fn)(double)) {
  return axb::HalfLineFunction::sample(g, [fn](double x) { return axb::cplx(fn(x)); });
}

inline double xe(double x) { return x * std::exp(-x); }
inline double x2e(double x) { return x * x * std::exp(-x); }

inline axb::HalfLineFunction log_gaussian(const axb::GridPtr& g, double u0 = 0.0, double sigma = 1.0) {
  return axb::realize(axb::parse_corpus_entry("log_gaussian:u0=" + std::to_string(u0) + ",sigma=" + std::to_string(sigma)), g);
}

}  // namespace testing
