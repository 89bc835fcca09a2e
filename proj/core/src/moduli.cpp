#include "axb/moduli.hpp"

#include <algorithm>
#include <cmath>

#include "axb/errors.hpp"

namespace axb {

double floored(double den, double scale) { return std::max(den, 1e-14 * scale); }

namespace {

int points_per_letter(int r, const ModulusOptions& opt) {
  const int by_budget = static_cast<int>(std::floor(std::pow(static_cast<double>(opt.combo_budget), 1.0 / r) + 1e-9));
  return std::max(1, std::min(opt.max_points, by_budget));
}

double sup_word(const RepresentationSpace& space, const DirectionWord& word, int idx,
                const std::vector<std::vector<double>>& grids, const Eigen::VectorXcd& g) {
  if (idx < 0) return space.norm(g);
  double best = 0.0;
  for (double t : grids[idx]) {
    const Eigen::VectorXcd d = space.act(word[idx], t, g) - g;
    best = std::max(best, sup_word(space, word, idx - 1, grids, d));
  }
  return best;
}

}  // namespace

double modulus_word(const RepresentationSpace& space, const DirectionWord& word, double s, const Eigen::VectorXcd& f,
                    const ModulusOptions& opt) {
  if (s < 0.0) throw DomainError("modulus scale must be nonnegative");
  if (s == 0.0 || word.empty()) return word.empty() ? space.norm(f) : 0.0;
  const int r = static_cast<int>(word.size());
  const int npts = points_per_letter(r, opt);
  std::vector<std::vector<double>> grids(r);
  for (int i = 0; i < r; ++i) {
    grids[i] = space.t_grid(word[i], s, npts);
    if (grids[i].empty()) throw DomainError("no admissible shifts in (0, s]");
  }
  return sup_word(space, word, r - 1, grids, f);
}

double modulus_mixed(const RepresentationSpace& space, int r, double s, const Eigen::VectorXcd& f,
                     const ModulusOptions& opt) {
  if (r < 1) throw DomainError("modulus order must be >= 1");
  if (s == 0.0) return 0.0;
  double acc = 0.0;
  for (const auto& w : all_words(r)) acc += modulus_word(space, w, s, f, opt);
  return acc;
}

ModulusProfile modulus_profile(const RepresentationSpace& space, int r, std::vector<double> s_list,
                               const Eigen::VectorXcd& f, const ModulusOptions& opt) {
  std::sort(s_list.begin(), s_list.end());
  ModulusProfile p;
  p.r = r;
  double running = 0.0;
  for (double s : s_list) {
    running = std::max(running, modulus_mixed(space, r, s, f, opt));
    p.entries.emplace_back(s, running);
  }
  return p;
}

namespace {

// sum_{|w|=k} Omega^{m}(s, A_w f), with Omega^0(s, g) = ||g||.
double derivative_moduli(const RepresentationSpace& space, int k, int m, double s, const Eigen::VectorXcd& f,
                         const ModulusOptions& opt) {
  double acc = 0.0;
  for (const auto& w : all_words(k)) {
    Eigen::VectorXcd g = f;
    for (auto it = w.rbegin(); it != w.rend(); ++it) g = space.generator(*it, g);
    acc += m == 0 ? space.norm(g) : modulus_mixed(space, m, s, g, opt);
  }
  return acc;
}

}  // namespace

InequalityReport verify_modulus_inequalities(const RepresentationSpace& space, int r, int k, const Eigen::VectorXcd& f,
                                             const std::vector<double>& s_list, double a, const ModulusOptions& opt) {
  if (k < 0 || k > r) throw DomainError("inequality check needs 0 <= k <= r");
  InequalityReport rep;
  rep.r = r;
  rep.k = k;
  rep.a = a;
  const double fn = space.norm(f);
  for (double s : s_list) {
    const double om = modulus_mixed(space, r, s, f, opt);
    const double rhs0 =
        k == 0 ? om : std::pow(s, k) * derivative_moduli(space, k, r - k, s, f, opt);
    const double om_a = modulus_mixed(space, r, a * s, f, opt);
    const double rhs2 = std::pow(s, r + k) * fn + (k == 0 ? om : modulus_mixed(space, r + k, s, f, opt));
    rep.s.push_back(s);
    rep.ratio0.push_back(om / floored(rhs0, fn));
    rep.ratio1.push_back(om_a / floored(om, fn));
    rep.ratio2.push_back(std::pow(s, k) * om / floored(rhs2, fn));
  }
  auto mx = [](const std::vector<double>& v) { return v.empty() ? 0.0 : *std::max_element(v.begin(), v.end()); };
  rep.c0 = mx(rep.ratio0);
  rep.c1 = mx(rep.ratio1);
  rep.c2 = mx(rep.ratio2);
  return rep;
}

KUpper k_upper_detail(const RepresentationSpace& space, int r, double s, const Eigen::VectorXcd& f) {
  if (!(s > 0.0)) throw DomainError("k_upper needs s > 0");
  KUpper k;
  k.trivial = space.norm(f);
  if (k.trivial == 0.0) return k;
  const double sr = std::pow(s, r);
  const Eigen::VectorXcd hf = space.hardy_steklov(r, s, f);
  k.hs_residual = space.norm(f - hf);
  k.hs_smooth = sr * sobolev_norm(space, hf, r);
  k.sobolev = sr * sobolev_norm(space, f, r);
  k.value = std::min({k.trivial, k.hs_residual + k.hs_smooth, k.sobolev});
  return k;
}

double k_upper(const RepresentationSpace& space, int r, double s, const Eigen::VectorXcd& f) {
  return k_upper_detail(space, r, s, f).value;
}

double k_lower(const RepresentationSpace& space, int r, double s, const Eigen::VectorXcd& f, const ModulusOptions& opt) {
  return modulus_mixed(space, r, s, f, opt);
}

double k_spectral(const SpectralMeasure& m, int r, double s) {
  double acc = 0.0;
  const double sr = std::pow(s, r);
  for (int k = 0; k < m.lambda.size(); ++k) {
    const double lam = std::max(m.lambda(k), 0.0);
    const double v = std::min(1.0, sr * std::pow(lam, 0.5 * r));
    acc += v * v * m.weight(k);
  }
  return std::sqrt(acc);
}

}  // namespace axb
