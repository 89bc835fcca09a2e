#pragma once

#include <utility>

namespace axb {

/// Element (a, b), a > 0, of the affine group acting by x -> a x + b.
struct GroupElement {
  double a = 1.0;
  double b = 0.0;
};

/// Coordinates x1 X1 + x2 X2 in the Lie algebra, with [X1, X2] = X2.
struct LieVector {
  double x1 = 0.0;
  double x2 = 0.0;
};

enum class HaarSide { left, right };

/// Throws DomainError unless a > 0 and both coordinates are finite.
GroupElement make_element(double a, double b);

/// (a1, b1)(a2, b2) = (a1 a2, a1 b2 + b1).
GroupElement multiply(const GroupElement& g1, const GroupElement& g2);

GroupElement inverse(const GroupElement& g);

/// exp(x1 X1 + x2 X2) = (e^{x1}, x2 (e^{x1} - 1) / x1); the x1 -> 0 limit is (1, x2).
GroupElement exp_map(const LieVector& v);

/// Inverse of exp_map: (ln a, b ln a / (a - 1)), with the a -> 1 limit (0, b).
LieVector log_map(const GroupElement& g);

/// Returns (t1, t2) with g = exp(t1 X1) exp(t2 X2), namely (ln a, b / a).
std::pair<double, double> factor(const GroupElement& g);

/// Density of the left (a^-2 da db) or right (a^-1 da db) Haar measure at g.
double haar_weight(const GroupElement& g, HaarSide side);

}  // namespace axb
