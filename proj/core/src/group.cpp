#include "axb/group.hpp"

#include <cmath>

#include "axb/errors.hpp"

namespace axb {

GroupElement make_element(double a, double b) {
  if (!(a > 0.0) || !std::isfinite(a) || !std::isfinite(b)) {
    throw DomainError("group element requires finite a > 0 and finite b");
  }
  return {a, b};
}

GroupElement multiply(const GroupElement& g1, const GroupElement& g2) {
  return {g1.a * g2.a, g1.a * g2.b + g1.b};
}

GroupElement inverse(const GroupElement& g) { return {1.0 / g.a, -g.b / g.a}; }

GroupElement exp_map(const LieVector& v) {
  if (std::abs(v.x1) < 1e-8) {
    // Two-term series of expm1(x)/x keeps full precision near the removable point.
    return {std::exp(v.x1), v.x2 * (1.0 + 0.5 * v.x1)};
  }
  return {std::exp(v.x1), v.x2 * std::expm1(v.x1) / v.x1};
}

LieVector log_map(const GroupElement& g) {
  const double x1 = std::log(g.a);
  if (std::abs(x1) < 1e-8) return {x1, g.b * (1.0 - 0.5 * x1)};
  return {x1, g.b * x1 / std::expm1(x1)};
}

std::pair<double, double> factor(const GroupElement& g) { return {std::log(g.a), g.b / g.a}; }

double haar_weight(const GroupElement& g, HaarSide side) {
  return side == HaarSide::left ? 1.0 / (g.a * g.a) : 1.0 / g.a;
}

}  // namespace axb
