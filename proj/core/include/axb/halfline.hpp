#pragma once

#include <vector>

#include "axb/grid.hpp"
#include "axb/group.hpp"

namespace axb {

/// Discretization choices shared by the half-line operations.
struct DiscretizationOptions {
  int fd_order = 8;          ///< accuracy of the central d/du stencil
  int interp_points = 8;     ///< Lagrange points for off-grid shifts (4 = cubic)
  int max_sobolev_order = 4;
};

/// Sequence of letters in {1, 2}; D_w f = D_{w[0]} ... D_{w[k-1]} f.
using DirectionWord = std::vector<int>;

/// All 2^k words of length k in lexicographic order.
std::vector<DirectionWord> all_words(int k);

/// Samples v shifted along the index axis: out_i = v(i + shift) with zero
/// extension; integer shifts (to 1e-12) are exact permutations.
Eigen::VectorXcd shift_samples(const Eigen::VectorXcd& v, double shift, int interp_points);

/// Same as shift_samples but for a strided line inside a larger array.
void shift_line(const cplx* in, cplx* out, int n, int stride, double shift, int interp_points);

/// Interpolated value at fractional index pos, zero outside [0, n-1].
cplx sample_at(const cplx* v, int n, int stride, double pos, int interp_points);

double xp_norm(const HalfLineFunction& f, double p = 2.0);
cplx inner(const HalfLineFunction& f, const HalfLineFunction& g);

/// Fraction of the squared X^2 mass that leaves the window under a shift by t in u.
double window_loss(const HalfLineFunction& f, double t);

struct ActResult {
  HalfLineFunction value;
  double window_loss = 0.0;
};

/// U(a,b) f(x) = e^{ibx} f(ax); dilation is a shift by ln a on the log axis.
ActResult act_with_loss(const GroupElement& g, const HalfLineFunction& f, const DiscretizationOptions& opt = {});
HalfLineFunction act(const GroupElement& g, const HalfLineFunction& f, const DiscretizationOptions& opt = {});
HalfLineFunction act_dilation(double t, const HalfLineFunction& f, const DiscretizationOptions& opt = {});
HalfLineFunction act_modulation(double t, const HalfLineFunction& f);

/// j = 1: d/du by central differences with zero extension; j = 2: multiplication by ix.
HalfLineFunction generator(int j, const HalfLineFunction& f, const DiscretizationOptions& opt = {});
HalfLineFunction mixed_derivative(const DirectionWord& word, const HalfLineFunction& f,
                                  const DiscretizationOptions& opt = {});

/// ||f|| + sum over words of length 1..m of ||D_w f||.
double sobolev_norm(const HalfLineFunction& f, int m, double p = 2.0, const DiscretizationOptions& opt = {});
/// ||f|| + sum over words of length exactly m.
double sobolev_norm_top(const HalfLineFunction& f, int m, double p = 2.0, const DiscretizationOptions& opt = {});

/// Indices at least `margin` stencil widths away from both window ends.
std::pair<int, int> interior_range(const LogGrid& g, const DiscretizationOptions& opt = {}, int margin = 2);

/// Relative L2 residual of a - b over [lo, hi), normalised by ||b|| on the same nodes.
double interior_rel_residual(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b, int lo, int hi);

}  // namespace axb
