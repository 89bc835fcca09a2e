#include "axb/halfline.hpp"

#include <cmath>

#include "axb/errors.hpp"
#include "axb/stencils.hpp"

namespace axb {

std::vector<DirectionWord> all_words(int k) {
  std::vector<DirectionWord> out;
  const int count = 1 << k;
  out.reserve(count);
  for (int code = 0; code < count; ++code) {
    DirectionWord w(k);
    for (int i = 0; i < k; ++i) w[i] = ((code >> (k - 1 - i)) & 1) + 1;
    out.push_back(std::move(w));
  }
  return out;
}

namespace {

bool near_integer(double v, double& rounded) {
  rounded = std::round(v);
  return std::abs(v - rounded) < 1e-12;
}

}  // namespace

void shift_line(const cplx* in, cplx* out, int n, int stride, double shift, int interp_points) {
  double q_round;
  if (near_integer(shift, q_round)) {
    const long q = static_cast<long>(q_round);
    for (int i = 0; i < n; ++i) {
      const long src = i + q;
      out[i * stride] = (src >= 0 && src < n) ? in[src * stride] : cplx(0.0);
    }
    return;
  }
  const double q = std::floor(shift);
  const double theta = shift - q;
  const auto w = lagrange_weights(theta, interp_points);
  const long lo = static_cast<long>(q) - interp_points / 2 + 1;
  for (int i = 0; i < n; ++i) {
    cplx acc = 0.0;
    for (int p = 0; p < interp_points; ++p) {
      const long src = i + lo + p;
      if (src >= 0 && src < n) acc += w[p] * in[src * stride];
    }
    out[i * stride] = acc;
  }
}

Eigen::VectorXcd shift_samples(const Eigen::VectorXcd& v, double shift, int interp_points) {
  Eigen::VectorXcd out(v.size());
  shift_line(v.data(), out.data(), static_cast<int>(v.size()), 1, shift, interp_points);
  return out;
}

cplx sample_at(const cplx* v, int n, int stride, double pos, int interp_points) {
  double r;
  if (near_integer(pos, r)) {
    const long k = static_cast<long>(r);
    return (k >= 0 && k < n) ? v[k * stride] : cplx(0.0);
  }
  const double q = std::floor(pos);
  const auto w = lagrange_weights(pos - q, interp_points);
  const long lo = static_cast<long>(q) - interp_points / 2 + 1;
  cplx acc = 0.0;
  for (int p = 0; p < interp_points; ++p) {
    const long src = lo + p;
    if (src >= 0 && src < n) acc += w[p] * v[src * stride];
  }
  return acc;
}

double xp_norm(const HalfLineFunction& f, double p) {
  if (!(p >= 1.0)) throw DomainError("xp_norm requires p >= 1");
  const auto& w = f.grid->weights();
  double acc = 0.0;
  if (p == 2.0) {
    for (int i = 0; i < f.size(); ++i) acc += w(i) * std::norm(f.values(i));
    return std::sqrt(acc);
  }
  for (int i = 0; i < f.size(); ++i) acc += w(i) * std::pow(std::abs(f.values(i)), p);
  return std::pow(acc, 1.0 / p);
}

cplx inner(const HalfLineFunction& f, const HalfLineFunction& g) {
  require_same_grid(f, g);
  const auto& w = f.grid->weights();
  cplx acc = 0.0;
  for (int i = 0; i < f.size(); ++i) acc += w(i) * f.values(i) * std::conj(g.values(i));
  return acc;
}

double window_loss(const HalfLineFunction& f, double t) {
  const auto& g = *f.grid;
  const auto& w = g.weights();
  double total = 0.0;
  double lost = 0.0;
  for (int i = 0; i < g.n(); ++i) {
    const double m = w(i) * std::norm(f.values(i));
    total += m;
    const double target = g.u(i) - t;  // where the sample lands after the shift
    if (target < g.u_min() - 1e-12 * g.h() || target > g.u_max() + 1e-12 * g.h()) lost += m;
  }
  return total > 0.0 ? lost / total : 0.0;
}

ActResult act_with_loss(const GroupElement& g, const HalfLineFunction& f, const DiscretizationOptions& opt) {
  const double t = std::log(g.a);
  Eigen::VectorXcd v = shift_samples(f.values, t / f.grid->h(), opt.interp_points);
  if (g.b != 0.0) {
    const auto& x = f.grid->x_nodes();
    for (int i = 0; i < f.size(); ++i) v(i) *= std::polar(1.0, g.b * x(i));
  }
  return {HalfLineFunction(f.grid, std::move(v)), window_loss(f, t)};
}

HalfLineFunction act(const GroupElement& g, const HalfLineFunction& f, const DiscretizationOptions& opt) {
  return act_with_loss(g, f, opt).value;
}

HalfLineFunction act_dilation(double t, const HalfLineFunction& f, const DiscretizationOptions& opt) {
  return {f.grid, shift_samples(f.values, t / f.grid->h(), opt.interp_points)};
}

HalfLineFunction act_modulation(double t, const HalfLineFunction& f) {
  Eigen::VectorXcd v(f.size());
  const auto& x = f.grid->x_nodes();
  for (int i = 0; i < f.size(); ++i) v(i) = std::polar(1.0, t * x(i)) * f.values(i);
  return {f.grid, std::move(v)};
}

HalfLineFunction generator(int j, const HalfLineFunction& f, const DiscretizationOptions& opt) {
  const int n = f.size();
  Eigen::VectorXcd v(n);
  if (j == 2) {
    const auto& x = f.grid->x_nodes();
    for (int i = 0; i < n; ++i) v(i) = cplx(0.0, x(i)) * f.values(i);
    return {f.grid, std::move(v)};
  }
  if (j != 1) throw DomainError("generator index must be 1 or 2");
  const auto st = central_stencil(1, opt.fd_order);
  const int w = st.half_width();
  const double inv_h = 1.0 / f.grid->h();
  for (int i = 0; i < n; ++i) {
    cplx acc = 0.0;
    for (int k = -w; k <= w; ++k) {
      const int src = i + k;
      if (src >= 0 && src < n && k != 0) acc += st.coeffs[w + k] * f.values(src);
    }
    v(i) = acc * inv_h;
  }
  return {f.grid, std::move(v)};
}

HalfLineFunction mixed_derivative(const DirectionWord& word, const HalfLineFunction& f,
                                  const DiscretizationOptions& opt) {
  HalfLineFunction g = f;
  for (auto it = word.rbegin(); it != word.rend(); ++it) g = generator(*it, g, opt);
  return g;
}

namespace {

// Sum of ||D_w f|| over all words of length in [1, m] (or exactly m when top_only).
void word_tree(const HalfLineFunction& g, int depth, int m, bool top_only, double p,
               const DiscretizationOptions& opt, double& acc) {
  if (depth == m) return;
  for (int j = 1; j <= 2; ++j) {
    HalfLineFunction d = generator(j, g, opt);
    if (!top_only || depth + 1 == m) acc += xp_norm(d, p);
    word_tree(d, depth + 1, m, top_only, p, opt, acc);
  }
}

void check_order(int m, const DiscretizationOptions& opt) {
  if (m < 0) throw DomainError("Sobolev order must be nonnegative");
  if (m > opt.max_sobolev_order) throw DomainError("Sobolev order exceeds configured maximum");
}

}  // namespace

double sobolev_norm(const HalfLineFunction& f, int m, double p, const DiscretizationOptions& opt) {
  check_order(m, opt);
  double acc = xp_norm(f, p);
  word_tree(f, 0, m, false, p, opt, acc);
  return acc;
}

double sobolev_norm_top(const HalfLineFunction& f, int m, double p, const DiscretizationOptions& opt) {
  check_order(m, opt);
  double acc = xp_norm(f, p);
  word_tree(f, 0, m, true, p, opt, acc);
  return acc;
}

std::pair<int, int> interior_range(const LogGrid& g, const DiscretizationOptions& opt, int margin) {
  const int w = central_stencil(1, opt.fd_order).half_width();
  const int lo = std::min(margin * w, g.n() / 4);
  return {lo, g.n() - lo};
}

double interior_rel_residual(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b, int lo, int hi) {
  double num = 0.0;
  double den = 0.0;
  for (int i = lo; i < hi; ++i) {
    num += std::norm(a(i) - b(i));
    den += std::norm(b(i));
  }
  return den > 0.0 ? std::sqrt(num / den) : std::sqrt(num);
}

}  // namespace axb
