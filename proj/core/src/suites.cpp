#include "axb/suites.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numeric>
#include <random>

#include "axb/besov.hpp"
#include "axb/errors.hpp"
#include "axb/frames.hpp"
#include "axb/group.hpp"
#include "axb/halfline.hpp"
#include "axb/halfplane.hpp"
#include "axb/macdonald.hpp"
#include "axb/moduli.hpp"
#include "axb/paley_wiener.hpp"
#include "axb/parallel.hpp"
#include "axb/representation.hpp"
#include "axb/smoothing.hpp"

namespace axb {

SuiteContext::SuiteContext(RunConfig cfg) : cfg_(std::move(cfg)) { validate(cfg_); }

GridPtr SuiteContext::grid(int n) {
  auto& g = grids_[n];
  if (!g) g = make_log_grid(cfg_.u_min, cfg_.u_max, n);
  return g;
}

OperatorPtr SuiteContext::op(int n) {
  auto& o = ops_[n];
  if (!o) o = matrix_laplacian(grid(n));
  return o;
}

KernelTablePtr SuiteContext::table() {
  if (!table_) table_ = kernel_table(grid(cfg_.grid_n), SpectralGrid(cfg_.tau_max, cfg_.spectral_m));
  return table_;
}

std::vector<CorpusEntry> SuiteContext::corpus() const {
  if (cfg_.corpus.empty()) throw DomainError("empty corpus");
  std::vector<CorpusEntry> out;
  for (const auto& id : cfg_.corpus) out.push_back(parse_corpus_entry(id));
  return out;
}

std::vector<CorpusEntry> SuiteContext::decaying() const {
  std::vector<CorpusEntry> out;
  for (auto& e : corpus()) {
    if (e.decaying) out.push_back(e);
  }
  if (out.empty()) throw DomainError("empty corpus: no decaying members");
  return out;
}

HalfLineFunction SuiteContext::realize(const CorpusEntry& e, int n) {
  return axb::realize(e, grid(n), e.decaying ? nullptr : op(n).get());
}

void SuiteContext::add_file(const std::string& name, std::string content) {
  files_.emplace_back(name, std::move(content));
}

namespace {

struct CriterionDef {
  const char* id;
  const char* title;
  std::function<CriterionResult(SuiteContext&)> run;
};

std::string fmt(const char* f, double a) {
  char buf[160];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

std::string fmt(const char* f, double a, double b) {
  char buf[160];
  std::snprintf(buf, sizeof buf, f, a, b);
  return buf;
}

std::string slug(const std::string& id) {
  std::string s;
  for (char c : id) s += (std::isalnum(static_cast<unsigned char>(c)) || c == '.' || c == '-') ? c : '_';
  return s;
}

// Least-squares slope of log y against log x.
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t n = x.size();
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += std::log(x[i]) / n;
    my += std::log(y[i]) / n;
  }
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxy += (std::log(x[i]) - mx) * (std::log(y[i]) - my);
    sxx += (std::log(x[i]) - mx) * (std::log(x[i]) - mx);
  }
  return sxy / sxx;
}

double rel_diff(double a, double b) { return std::abs(a - b) / std::max(std::abs(a), std::abs(b)); }

// ---------------------------------------------------------------- AC1
CriterionResult group_algebra(SuiteContext& ctx) {
  std::mt19937_64 rng(ctx.config().seed);
  std::uniform_real_distribution<double> la(-3.0, 3.0), lb(-5.0, 5.0);
  auto draw = [&] { return make_element(std::exp(la(rng)), lb(rng)); };
  auto defect = [](const GroupElement& g, const GroupElement& h) {
    return std::max(std::abs(g.a - h.a) / std::max(1.0, std::abs(h.a)), std::abs(g.b - h.b) / std::max(1.0, std::abs(h.b)));
  };
  double assoc = 0.0, inv = 0.0, explog = 0.0, fact = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const GroupElement g1 = draw(), g2 = draw(), g3 = draw();
    assoc = std::max(assoc, defect(multiply(multiply(g1, g2), g3), multiply(g1, multiply(g2, g3))));
    inv = std::max({inv, defect(multiply(g1, inverse(g1)), {1.0, 0.0}), defect(multiply(inverse(g1), g1), {1.0, 0.0})});
    explog = std::max(explog, defect(exp_map(log_map(g1)), g1));
    const LieVector v{la(rng), lb(rng)};
    const LieVector w = log_map(exp_map(v));
    explog = std::max({explog, std::abs(w.x1 - v.x1) / std::max(1.0, std::abs(v.x1)),
                       std::abs(w.x2 - v.x2) / std::max(1.0, std::abs(v.x2))});
    const auto [t1, t2] = factor(g2);
    fact = std::max(fact, defect(multiply(exp_map({t1, 0.0}), exp_map({0.0, t2})), g2));
  }
  CriterionResult r;
  const double worst = std::max({assoc, inv, explog, fact});
  r.passed = worst < ctx.tol(1e-12);
  r.summary = fmt("max componentwise defect %.3g (threshold %.3g)", worst, ctx.tol(1e-12));
  r.metrics = {{"samples", 1000},           {"associativity", assoc}, {"inverse", inv},
               {"exp_log_roundtrip", explog}, {"factor_roundtrip", fact}, {"max_defect", worst}};
  return r;
}

// ---------------------------------------------------------------- AC2
CriterionResult partition_telescoping(SuiteContext& ctx) {
  const int J = 20;
  const DyadicPartition part(J);
  double worst = 0.0, worst_at = 0.0;
  const int npts = 10000;
  for (int i = 0; i < npts; ++i) {
    const double lam = std::pow(10.0, -4.0 + 11.0 * i / (npts - 1));
    const double d = std::abs(part.partial_sum(lam) - partition_g(std::ldexp(lam, -J)));
    if (d > worst) {
      worst = d;
      worst_at = lam;
    }
  }
  CriterionResult r;
  r.passed = worst < ctx.tol(1e-12);
  r.summary = fmt("max telescoping defect %.3g over 1e4 log-spaced lambda (threshold %.3g)", worst, ctx.tol(1e-12));
  r.metrics = {{"J", J}, {"points", npts}, {"lambda_range", {1e-4, 1e7}}, {"max_defect", worst}, {"worst_lambda", worst_at}};
  return r;
}

// ---------------------------------------------------------------- AC3
CriterionResult energy_identity(SuiteContext& ctx) {
  const int n = ctx.config().grid_n;
  const auto op = ctx.op(n);
  const int J = covering_index(*op, BandAxis::lambda);
  const auto orth = build_frames(J, *op);
  const auto redundant = build_frames(J, *op, BandAxis::lambda, FrameKind::redundant);
  const FrameBounds fb = frame_bounds(orth, *op);
  const FrameBounds fb2 = frame_bounds(redundant, *op);
  double worst = 0.0;
  Json rows = Json::array();
  for (const auto& e : ctx.decaying()) {
    const HalfLineFunction f = ctx.realize(e, n);
    const double f2 = std::pow(xp_norm(f), 2);
    const auto d = lp_decompose(f, J, *op);
    double acc = 0.0;
    for (const auto& b : d.bands) acc += std::pow(xp_norm(b), 2);
    const double energy = std::abs(acc - f2) / f2;
    const double recon = xp_norm(f - lp_reconstruct(f, J, *op)) / std::sqrt(f2);
    const auto coeffs = frame_analysis(f, orth, *op);
    double parseval = 0.0;
    for (const auto& c : coeffs) parseval += c.squaredNorm();
    const double frame_rt = xp_norm(f - frame_synthesis(coeffs, orth, *op)) / std::sqrt(f2);
    const double dual_rt =
        xp_norm(f - frame_synthesis(frame_analysis(f, redundant, *op), redundant, *op)) / std::sqrt(f2);
    worst = std::max(worst, energy);
    rows.push_back({{"function", e.id()},
                    {"energy_defect", energy},
                    {"reconstruction_error", recon},
                    {"frame_parseval_defect", std::abs(parseval - f2) / f2},
                    {"frame_roundtrip_error", frame_rt},
                    {"redundant_roundtrip_error", dual_rt},
                    {"tail_fraction", d.tail_fraction}});
  }
  CriterionResult r;
  r.passed = worst < ctx.tol(1e-10);
  r.summary = fmt("max |sum ||F_j f||^2 - ||f||^2| / ||f||^2 = %.3g (threshold %.3g)", worst, ctx.tol(1e-10));
  r.metrics = {{"J", J},
               {"axis", "lambda"},
               {"frame_bounds", {fb.a, fb.b}},
               {"redundant_frame_bounds", {fb2.a, fb2.b}},
               {"coverage_gap", fb.coverage_gap},
               {"max_energy_defect", worst},
               {"functions", rows}};
  return r;
}

// ---------------------------------------------------------------- AC4
CriterionResult kernel_eigenrelation(SuiteContext& ctx) {
  const int n = ctx.config().oracle_n;
  const GridPtr g = ctx.grid(n);
  const auto [lo, hi] = interior_range(*g);
  Json rows = Json::array();
  double worst = 0.0;
  for (double tau : {0.5, 1.0, 2.0, 5.0}) {
    Eigen::VectorXcd v(n);
    for (int i = 0; i < n; ++i) v(i) = macdonald_kernel(tau, g->x(i));
    const HalfLineFunction k(g, v);
    const double res = interior_rel_residual(apply_laplacian_fd(k).values, tau * tau * v, lo, hi);
    worst = std::max(worst, res);
    rows.push_back({{"tau", tau}, {"interior_residual", res}});
  }
  CriterionResult r;
  r.passed = worst < ctx.tol(1e-4);
  r.summary = fmt("max interior residual %.3g at n=%g", worst, n);
  r.metrics = {{"n", n}, {"interior", {lo, hi}}, {"max_residual", worst}, {"kernels", rows}};
  return r;
}

// ---------------------------------------------------------------- AC5
CriterionResult two_oracles(SuiteContext& ctx) {
  const int n = ctx.config().grid_n;
  const auto op = ctx.op(n);
  const auto table = ctx.table();
  const Multiplier heat = [](double lam) { return cplx(std::exp(-lam)); };
  double worst = 0.0;
  bool flagged = false;
  Json rows = Json::array();
  for (const auto& e : ctx.decaying()) {
    const HalfLineFunction f = ctx.realize(e, n);
    const auto a = apply_multiplier(heat, f, *table);
    const auto b = apply_multiplier(heat, f, *op);
    const double d = xp_norm(a.value - b.value) / xp_norm(b.value);
    worst = std::max(worst, d);
    flagged = flagged || a.unresolved || b.unresolved;
    rows.push_back({{"function", e.id()},
                    {"relative_difference", d},
                    {"kernel_unresolved_fraction", a.unresolved_fraction},
                    {"matrix_unresolved_fraction", b.unresolved_fraction}});
  }
  CriterionResult r;
  r.passed = worst < ctx.tol(1e-3) && !(ctx.config().escalate_flags && flagged);
  r.summary = fmt("max relative L2 difference %.3g (threshold %.3g)", worst, ctx.tol(1e-3));
  r.metrics = {{"n", n},
               {"tau_max", ctx.config().tau_max},
               {"spectral_m", ctx.config().spectral_m},
               {"kernel_normalization", table->normalization},
               {"max_relative_difference", worst},
               {"unresolved_flag", flagged},
               {"functions", rows}};
  return r;
}

// Random band-limited family shared by AC6 and AC7.
struct BandLimited {
  double omega;
  int terms;
  unsigned long long seed;
};

std::vector<BandLimited> random_bandlimited(unsigned long long seed, int count) {
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::uniform_real_distribution<double> om(1.5, 8.0);
  std::uniform_int_distribution<int> tm(4, 16);
  std::vector<BandLimited> out;
  for (int i = 0; i < count; ++i) {
    const double omega = om(rng);
    const int terms = tm(rng);
    out.push_back({omega, terms, seed + 1000003ULL * (i + 1)});
  }
  return out;
}

// ---------------------------------------------------------------- AC6
CriterionResult bernstein(SuiteContext& ctx) {
  const int n = ctx.config().grid_n;
  const auto op = ctx.op(n);
  double worst = 0.0;
  Json rows = Json::array();
  for (const auto& b : random_bandlimited(ctx.config().seed, 20)) {
    const HalfLineFunction f = bandlimited_random(*op, b.omega, b.terms, b.seed);
    Json ratios = Json::array();
    for (double s : {1.0, 2.0, 3.0}) {
      const auto rep = bernstein_check(f, b.omega, s, *op);
      worst = std::max(worst, rep.ratio);
      ratios.push_back(rep.ratio);
    }
    rows.push_back({{"omega", b.omega}, {"terms", b.terms}, {"seed", b.seed}, {"ratios_s123", ratios}});
  }
  CriterionResult r;
  r.passed = worst <= 1.0 + ctx.tol(1e-8);
  r.summary = fmt("max ||Delta^{s/2} f|| / (omega^s ||f||) = %.12f", worst);
  r.metrics = {{"functions", 20}, {"max_ratio", worst}, {"samples", rows}};
  return r;
}

// ---------------------------------------------------------------- AC7
CriterionResult riesz_boas_criterion(SuiteContext& ctx) {
  const int n = ctx.config().grid_n;
  const auto op = ctx.op(n);
  struct Member {
    std::string id;
    double omega;
    HalfLineFunction f;
  };
  std::vector<Member> members;
  for (const auto& e : ctx.corpus()) {
    if (e.family == "bandlimited_random") members.push_back({e.id(), e.param("omega"), ctx.realize(e, n)});
  }
  for (const auto& b : random_bandlimited(ctx.config().seed + 7, 4)) {
    members.push_back({"bandlimited_random:omega=" + format_double(b.omega) + ",terms=" + std::to_string(b.terms) +
                           ",seed=" + std::to_string(b.seed),
                       b.omega, bandlimited_random(*op, b.omega, b.terms, b.seed)});
  }
  const std::vector<int> ks{8, 16, 32, 64, 128};
  bool monotone = true;
  double worst_rel = 0.0;
  Json rows = Json::array();
  for (const auto& m : members) {
    std::vector<double> err, bound;
    double rel = 0.0;
    for (int k : ks) {
      const auto rb = riesz_boas(m.omega, m.f, k, *op);
      err.push_back(rb.error);
      bound.push_back(rb.tail_bound);
      rel = rb.rel_error;
    }
    for (std::size_t i = 1; i < err.size(); ++i) monotone = monotone && err[i] < err[i - 1];
    worst_rel = std::max(worst_rel, rel);
    rows.push_back({{"function", m.id}, {"omega", m.omega}, {"errors", err}, {"tail_bounds", bound}, {"rel_error_K128", rel}});
  }
  CriterionResult r;
  r.passed = monotone && worst_rel < ctx.tol(1e-2);
  r.summary = std::string(monotone ? "errors strictly decreasing" : "errors NOT strictly decreasing") +
              fmt(", max relative error at K=128 %.3g", worst_rel);
  r.metrics = {{"K", ks}, {"strictly_decreasing", monotone}, {"max_rel_error_K128", worst_rel}, {"functions", rows}};
  return r;
}

// ---------------------------------------------------------------- AC8
CriterionResult commutation(SuiteContext& ctx) {
  const int n = ctx.config().grid_n;
  const double h = ctx.grid(n)->h();
  double worst = 0.0;
  Json rows = Json::array();
  for (const auto& e : ctx.decaying()) {
    const HalfLineFunction f = ctx.realize(e, n);
    for (int m : {1, 2, 3}) {
      for (int k : {1, 3, -2}) {
        for (double t2 : {0.5, 1.7}) {
          const double res = commutation_check(m, k * h, t2, f);
          worst = std::max(worst, res);
          rows.push_back({{"function", e.id()}, {"m", m}, {"t1_steps", k}, {"t2", t2}, {"residual", res}});
        }
      }
    }
  }
  CriterionResult r;
  r.passed = worst < ctx.tol(1e-8);
  r.summary = fmt("max relative residual %.3g (threshold %.3g)", worst, ctx.tol(1e-8));
  r.metrics = {{"max_residual", worst}, {"cases", rows}};
  return r;
}

// ---------------------------------------------------------------- AC9
CriterionResult hardy_steklov_criterion(SuiteContext& ctx) {
  const int n = ctx.config().grid_n;
  double worst_q = 0.0;
  double min_order = std::numeric_limits<double>::infinity();
  Json quad = Json::array(), orders = Json::array();
  std::vector<double> s_small;
  for (int k = 4; k <= 8; ++k) s_small.push_back(std::ldexp(1.0, -k));
  for (const auto& e : ctx.decaying()) {
    const HalfLineFunction f = ctx.realize(e, n);
    for (int r : {1, 2, 3}) {
      for (double s : {0.25, 1.0, 4.0}) {
        const HalfLineFunction closed = steklov_avg({2, r, s}, f);
        const double d = xp_norm(closed - steklov_dir2_quadrature(r, s, f)) / xp_norm(closed);
        worst_q = std::max(worst_q, d);
        quad.push_back({{"function", e.id()}, {"r", r}, {"s", s}, {"relative_error", d}});
      }
    }
    for (int r : {1, 2}) {
      std::vector<double> err;
      for (double s : s_small) err.push_back(xp_norm(f - hardy_steklov(r, s, f)));
      const double order = loglog_slope(s_small, err);
      min_order = std::min(min_order, order);
      orders.push_back({{"function", e.id()}, {"r", r}, {"s", s_small}, {"errors", err}, {"observed_order", order}});
    }
  }
  CriterionResult r;
  r.passed = worst_q < ctx.tol(1e-10) && min_order >= 1.0;
  r.summary = fmt("quadrature vs closed form %.3g; min observed order %.3f", worst_q, min_order);
  r.metrics = {{"max_quadrature_error", worst_q}, {"min_observed_order", min_order}, {"quadrature", quad}, {"consistency", orders}};
  return r;
}

// ---------------------------------------------------------------- AC10
CriterionResult k_sandwich(SuiteContext& ctx) {
  const int n = ctx.config().grid_n;
  const auto members = ctx.decaying();
  const auto op = ctx.op(n);
  const auto g = ctx.grid(n);
  std::vector<HalfLineFunction> fs;
  for (const auto& e : members) fs.push_back(ctx.realize(e, n));
  std::vector<double> scales;
  for (int k = -8; k <= 4; ++k) scales.push_back(std::ldexp(1.0, k));
  const HalfLineSpace space(g);
  struct Out {
    double c_hat = 0.0, c_prime = 0.0, cs_hat = 0.0, cs_prime = 0.0;
    Json rows = Json::array();
    std::vector<std::pair<std::string, std::string>> csv;
  };
  std::vector<Out> outs(fs.size());
  parallel_for(static_cast<int>(fs.size()), [&](int i) {
    const auto& f = fs[i];
    const double fn = xp_norm(f);
    const SpectralMeasure m = spectral_measure(f, *op);
    Out& o = outs[i];
    for (int r : {1, 2}) {
      std::vector<std::pair<double, double>> lo_prof, up_prof, sp_prof;
      for (double s : scales) {
        const double kl = k_lower(space, r, s, f.values);
        const double ku = k_upper(space, r, s, f.values);
        const double ks = k_spectral(m, r, s);
        const double tail = std::min(std::pow(s, r), 1.0) * fn;
        o.c_hat = std::max(o.c_hat, kl / floored(ku, fn));
        o.c_prime = std::max(o.c_prime, ku / floored(kl + tail, fn));
        o.cs_hat = std::max(o.cs_hat, kl / floored(ks, fn));
        o.cs_prime = std::max(o.cs_prime, ks / floored(kl + tail, fn));
        o.rows.push_back({{"function", members[i].id()}, {"r", r}, {"s", s}, {"k_lower", kl}, {"k_upper", ku}, {"k_spectral", ks}});
        lo_prof.emplace_back(s, kl);
        up_prof.emplace_back(s, ku);
        sp_prof.emplace_back(s, ks);
      }
      const std::string stem = "profiles/ac10_" + slug(members[i].id()) + "_r" + std::to_string(r);
      o.csv.emplace_back(stem + "_k_lower.csv", profile_csv(lo_prof));
      o.csv.emplace_back(stem + "_k_upper.csv", profile_csv(up_prof));
      o.csv.emplace_back(stem + "_k_spectral.csv", profile_csv(sp_prof));
    }
  });
  double c_hat = 0.0, c_prime = 0.0, cs_hat = 0.0, cs_prime = 0.0;
  Json per = Json::array(), rows = Json::array();
  for (std::size_t i = 0; i < outs.size(); ++i) {
    const auto& o = outs[i];
    c_hat = std::max(c_hat, o.c_hat);
    c_prime = std::max(c_prime, o.c_prime);
    cs_hat = std::max(cs_hat, o.cs_hat);
    cs_prime = std::max(cs_prime, o.cs_prime);
    per.push_back({{"function", members[i].id()}, {"c_hat", o.c_hat}, {"c_prime", o.c_prime},
                   {"spectral_c_hat", o.cs_hat}, {"spectral_c_prime", o.cs_prime}});
    for (const auto& row : o.rows) rows.push_back(row);
    for (const auto& [name, content] : o.csv) ctx.add_file(name, content);
  }
  CriterionResult r;
  r.passed = c_hat < 10.0 && c_prime < 100.0 && cs_hat < 10.0 && cs_prime < 100.0;
  r.summary = fmt("C_hat = %.4g (< 10), C' = %.4g (< 100)", c_hat, c_prime) +
              fmt("; spectral: %.4g, %.4g", cs_hat, cs_prime);
  r.metrics = {{"r", {1, 2}},
               {"s_range", {scales.front(), scales.back()}},
               {"c_hat", c_hat},
               {"c_prime", c_prime},
               {"spectral_c_hat", cs_hat},
               {"spectral_c_prime", cs_prime},
               {"per_function", per},
               {"table", rows}};
  return r;
}

// ---------------------------------------------------------------- AC11
struct BesovCase {
  double alpha;
  double q;
};

const std::vector<BesovCase> kBesovCases{{0.5, 2.0}, {1.0, kInf}, {1.3, 1.0}};
const char* const kRealizations[] = {"k", "modulus", "approx", "projections", "frames"};

// realization x case values for one function on one grid.
std::vector<std::vector<double>> besov_values(const HalfLineFunction& f, const DiscreteOperator& op, int r,
                                              std::vector<std::pair<double, double>>* modulus_out = nullptr,
                                              std::vector<std::pair<double, double>>* k_out = nullptr) {
  const HalfLineSpace space(f.grid);
  const double fn = xp_norm(f);
  const auto scales = dyadic_scales();
  const auto mod = modulus_profile(space, r, scales, f.values).entries;
  std::vector<std::pair<double, double>> kp;
  for (double s : scales) kp.emplace_back(s, k_upper(space, r, s, f.values));
  if (modulus_out) *modulus_out = mod;
  if (k_out) *k_out = kp;
  std::vector<std::vector<double>> v(5, std::vector<double>(kBesovCases.size()));
  for (std::size_t c = 0; c < kBesovCases.size(); ++c) {
    const auto [alpha, q] = kBesovCases[c];
    v[0][c] = fn + weighted_scale_sum(kp, alpha, q);
    v[1][c] = fn + weighted_scale_sum(mod, alpha, q);
    v[2][c] = besov_norm_bands(f, alpha, q, BandVariant::approx, op);
    v[3][c] = besov_norm_bands(f, alpha, q, BandVariant::projections, op);
    v[4][c] = besov_norm_bands(f, alpha, q, BandVariant::frames, op);
  }
  return v;
}

CriterionResult besov_equivalence(SuiteContext& ctx) {
  const int n = ctx.config().grid_n, nc = ctx.config().refine_n;
  const int r = 2;
  const auto members = ctx.decaying();
  const auto op = ctx.op(n);
  const auto opc = ctx.op(nc);
  std::vector<HalfLineFunction> fs, fc;
  for (const auto& e : members) {
    fs.push_back(ctx.realize(e, n));
    fc.push_back(ctx.realize(e, nc));
  }
  struct Out {
    std::vector<std::vector<double>> fine, coarse;
    std::vector<std::pair<double, double>> mod, kp;
  };
  std::vector<Out> outs(members.size());
  parallel_for(static_cast<int>(members.size()), [&](int i) {
    outs[i].fine = besov_values(fs[i], *op, r, &outs[i].mod, &outs[i].kp);
    outs[i].coarse = besov_values(fc[i], *opc, r);
  });
  double worst_ratio = 0.0, worst_drift = 0.0;
  Json reports = Json::array();
  for (std::size_t i = 0; i < members.size(); ++i) {
    const auto& o = outs[i];
    const std::string id = members[i].id();
    ctx.add_file("profiles/ac11_" + slug(id) + "_modulus_r2.csv", profile_csv(o.mod));
    ctx.add_file("profiles/ac11_" + slug(id) + "_k_upper_r2.csv", profile_csv(o.kp));
    const auto bn = band_norms(spectral_measure(fs[i], *op), covering_index(*op, BandAxis::root), BandAxis::root);
    for (const auto& bc : kBesovCases) {
      std::string csv = "j,band_norm,weighted\n";
      for (std::size_t j = 0; j < bn.size(); ++j) {
        csv += std::to_string(j) + "," + format_double(bn[j]) + "," +
               format_double(std::pow(2.0, bc.alpha * static_cast<double>(j)) * bn[j]) + "\n";
      }
      ctx.add_file("profiles/ac11_" + slug(id) + "_bands_alpha" + format_double(bc.alpha) + ".csv", csv);
    }
    for (std::size_t c = 0; c < kBesovCases.size(); ++c) {
      Json norms = Json::object(), coarse = Json::object(), drift = Json::object();
      double lo = kInf, hi = 0.0, dmax = 0.0;
      for (int k = 0; k < 5; ++k) {
        const double v = o.fine[k][c], vc = o.coarse[k][c];
        norms[kRealizations[k]] = v;
        coarse[kRealizations[k]] = vc;
        const double d = std::abs(v - vc) / v;
        drift[kRealizations[k]] = d;
        lo = std::min(lo, v);
        hi = std::max(hi, v);
        dmax = std::max(dmax, d);
      }
      Json matrix = Json::array();
      for (int a = 0; a < 5; ++a) {
        Json row = Json::array();
        for (int b = 0; b < 5; ++b) row.push_back(std::max(o.fine[a][c], o.fine[b][c]) / std::min(o.fine[a][c], o.fine[b][c]));
        matrix.push_back(row);
      }
      worst_ratio = std::max(worst_ratio, hi / lo);
      worst_drift = std::max(worst_drift, dmax);
      reports.push_back({{"function", id},
                         {"alpha", kBesovCases[c].alpha},
                         {"q", std::isinf(kBesovCases[c].q) ? Json("inf") : Json(kBesovCases[c].q)},
                         {"r", r},
                         {"norms", norms},
                         {"norms_coarse", coarse},
                         {"ratio_matrix", matrix},
                         {"max_min_ratio", hi / lo},
                         {"refinement_drift", drift}});
    }
  }
  CriterionResult res;
  res.passed = worst_ratio < 50.0 && worst_drift < 0.2;
  res.summary = fmt("max realization ratio %.4g (< 50), max refinement drift %.3g (< 0.2)", worst_ratio, worst_drift);
  res.metrics = {{"grid_n", n},
                 {"refine_n", nc},
                 {"realizations", {"k", "modulus", "approx", "projections", "frames"}},
                 {"band_axis", "sqrt_lambda"},
                 {"max_ratio", worst_ratio},
                 {"max_drift", worst_drift},
                 {"besov_reports", reports}};
  return res;
}

// ---------------------------------------------------------------- AC12
CriterionResult jackson(SuiteContext& ctx) {
  const int n = ctx.config().grid_n, nc = ctx.config().refine_n;
  const int r = 2;
  const auto members = ctx.decaying();
  std::vector<double> sigmas;
  for (int k = -2; k <= 6; ++k) sigmas.push_back(std::ldexp(1.0, k));
  auto run = [&](int nn) {
    std::vector<HalfLineFunction> fs;
    for (const auto& e : members) fs.push_back(ctx.realize(e, nn));
    const auto op = ctx.op(nn);
    return jackson_check(sigmas, r, fs, *op, HalfLineSpace(ctx.grid(nn)));
  };
  const JacksonReport fine = run(n);
  const JacksonReport coarse = run(nc);
  const auto op = ctx.op(n);
  // Top decade of the sigma grid.
  const double sigma_lo = sigmas.back() / 10.0;
  double worst_slope = -kInf;
  Json slopes = Json::array(), rows = Json::array();
  for (const auto& e : members) {
    const SpectralProfile prof(spectral_measure(ctx.realize(e, n), *op));
    const double sl = jackson_slope(prof, sigma_lo);
    worst_slope = std::max(worst_slope, std::isnan(sl) ? kInf : sl);
    slopes.push_back({{"function", e.id()}, {"slope", sl}});
  }
  for (const auto& row : fine.rows) {
    rows.push_back({{"function", members[row.function_index].id()}, {"sigma", row.sigma}, {"best", row.best},
                    {"rhs", row.rhs}, {"ratio", row.ratio}});
  }
  const double drift = rel_diff(fine.c_hat, coarse.c_hat);
  CriterionResult res;
  res.passed = std::isfinite(fine.c_hat) && fine.c_hat < 100.0 && drift < 0.2 && worst_slope <= -r + 0.25;
  res.summary = fmt("C_hat %.4g (coarse %.4g)", fine.c_hat, coarse.c_hat) + fmt(", max slope %.3f (<= %.2f)", worst_slope, -r + 0.25);
  res.metrics = {{"r", r},      {"sigma", sigmas},         {"c_hat", fine.c_hat}, {"c_hat_coarse", coarse.c_hat},
                 {"drift", drift}, {"slope_decade", {sigma_lo, sigmas.back()}}, {"max_slope", worst_slope}, {"slopes", slopes},    {"table", rows}};
  return res;
}

// ---------------------------------------------------------------- AC13
CriterionResult halfplane(SuiteContext& ctx) {
  const auto grid = make_halfplane_grid(ctx.config().plane_n_u, ctx.config().plane_n_y);
  std::vector<HalfPlaneFunction> fs;
  Json ids = Json::array();
  for (const auto& e : default_plane_corpus()) {
    fs.push_back(plane_gaussian(grid, e.u0, e.su, e.y0, e.sy));
    ids.push_back(e.id());
  }
  bool ok = true;
  Json sides = Json::object();
  for (Side side : {Side::left, Side::right}) {
    double iso = 0.0, offgrid = 0.0, forced = 0.0, stated = 0.0, expanded = 0.0;
    for (const auto& f : fs) {
      const auto ir = isometry_defects(f, side);
      iso = std::max(iso, ir.max_defect);
      offgrid = std::max(offgrid, ir.offgrid_defect);
      const auto cr = commutator_check(side, f);
      forced = std::max(forced, cr.forced_residual);
      stated = std::max(stated, cr.stated_residual);
    }
    const auto lap = laplacian_2d(side, grid);
    for (const auto& f : fs) {
      expanded = std::max(expanded, interior_residual_2d(*grid, lap->apply(f.values),
                                                         expanded_laplacian(side, *grid, f.values), 16));
    }
    const auto sg = sobolev_graph_check(fs, 1, *lap);
    const double lam_min = lap->min_eigenvalue();
    ok = ok && iso < ctx.tol(1e-10) && lam_min > -ctx.tol(1e-8) && sg.finite;
    sides[side_name(side)] = {{"isometry_defect", iso},
                              {"offgrid_isometry_defect", offgrid},
                              {"min_eigenvalue", lam_min},
                              {"max_eigenvalue", lap->decomposition().eigenvalues().maxCoeff()},
                              {"reassembly_residual", lap->decomposition().reassembly_residual()},
                              {"expanded_formula_residual", expanded},
                              {"commutator_forced_residual", forced},
                              {"commutator_stated_residual", stated},
                              {"sobolev_graph_ratio_m", sg.ratio_m},
                              {"sobolev_graph_ratio_2m", sg.ratio_2m},
                              {"sobolev_graph_max", sg.max_ratio},
                              {"sobolev_graph_finite", sg.finite}};
  }
  CriterionResult r;
  r.passed = ok;
  r.summary = "left: isometry " + format_double(sides["left"]["isometry_defect"].get<double>()) + ", min eig " +
              format_double(sides["left"]["min_eigenvalue"].get<double>()) + "; right: isometry " +
              format_double(sides["right"]["isometry_defect"].get<double>()) + ", min eig " +
              format_double(sides["right"]["min_eigenvalue"].get<double>());
  r.metrics = {{"grid", grid->key()}, {"corpus", ids}, {"sides", sides}};
  return r;
}

// ---------------------------------------------------------------- AC14
std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

CriterionResult determinism(SuiteContext& ctx) {
  RunConfig cfg = ctx.config();
  const std::vector<std::string> ids{"AC1", "AC2", "AC6", "AC7", "AC9"};
  auto once = [&] {
    SuiteContext local(cfg);
    Json arr = Json::array();
    for (const auto& id : ids) {
      const auto res = run_criterion(id, local);
      arr.push_back({{"id", res.id}, {"passed", res.passed}, {"metrics", res.metrics}});
    }
    std::string out = dump_json(arr);
    for (const auto& [name, content] : local.files()) out += name + "\n" + content;
    return out;
  };
  const std::string a = once();
  const std::string b = once();
  char hex[2][24];
  std::snprintf(hex[0], sizeof hex[0], "%016llx", static_cast<unsigned long long>(fnv1a(a)));
  std::snprintf(hex[1], sizeof hex[1], "%016llx", static_cast<unsigned long long>(fnv1a(b)));
  CriterionResult r;
  r.passed = a == b;
  r.summary = std::string(r.passed ? "byte-identical" : "reports differ") + " (" + std::to_string(a.size()) + " bytes)";
  r.metrics = {{"criteria", ids}, {"bytes", a.size()}, {"hash_first", hex[0]}, {"hash_second", hex[1]}, {"identical", r.passed}};
  return r;
}

const std::vector<CriterionDef>& registry() {
  static const std::vector<CriterionDef> defs = {
      {"AC1", "group algebra round trips", group_algebra},
      {"AC2", "partition telescoping", partition_telescoping},
      {"AC3", "Littlewood-Paley energy identity", energy_identity},
      {"AC4", "kernel eigenrelation", kernel_eigenrelation},
      {"AC5", "kernel vs matrix heat multiplier", two_oracles},
      {"AC6", "Bernstein inequality", bernstein},
      {"AC7", "Riesz-Boas truncation", riesz_boas_criterion},
      {"AC8", "commutation formula", commutation},
      {"AC9", "Hardy-Steklov closed forms and consistency", hardy_steklov_criterion},
      {"AC10", "K-functional sandwich", k_sandwich},
      {"AC11", "Besov norm equivalence", besov_equivalence},
      {"AC12", "Jackson inequality", jackson},
      {"AC13", "half-plane representations", halfplane},
      {"AC14", "determinism", determinism},
  };
  return defs;
}

const CriterionDef& find_def(const std::string& id) {
  for (const auto& d : registry()) {
    if (id == d.id) return d;
  }
  throw UnknownName("unknown criterion '" + id + "'");
}

}  // namespace

std::vector<std::string> criterion_ids() {
  std::vector<std::string> out;
  for (const auto& d : registry()) out.push_back(d.id);
  return out;
}

std::string criterion_title(const std::string& id) { return find_def(id).title; }

std::vector<std::pair<std::string, std::vector<std::string>>> suite_aliases() {
  return {{"group", {"AC1"}},
          {"partition", {"AC2"}},
          {"frames", {"AC2", "AC3"}},
          {"spectral", {"AC4", "AC5"}},
          {"paley_wiener", {"AC6", "AC7"}},
          {"smoothing", {"AC8", "AC9"}},
          {"kfunctional", {"AC10"}},
          {"besov", {"AC10", "AC11"}},
          {"jackson", {"AC6", "AC7", "AC12"}},
          {"halfplane", {"AC13"}},
          {"determinism", {"AC14"}}};
}

std::vector<std::string> resolve_suite(const std::string& name) {
  if (name == "all") return criterion_ids();
  for (const auto& d : registry()) {
    if (name == d.id) return {d.id};
  }
  for (const auto& [alias, ids] : suite_aliases()) {
    if (alias == name) return ids;
  }
  throw UnknownName("unknown suite '" + name + "'");
}

CriterionResult run_criterion(const std::string& id, SuiteContext& ctx) {
  const auto& def = find_def(id);
  CriterionResult r = def.run(ctx);
  r.id = def.id;
  r.title = def.title;
  return r;
}

Json config_json(const RunConfig& c) {
  return {{"grid_n", c.grid_n},
          {"u_min", c.u_min},
          {"u_max", c.u_max},
          {"refine_n", c.refine_n},
          {"oracle_n", c.oracle_n},
          {"tau_max", c.tau_max},
          {"spectral_m", c.spectral_m},
          {"corpus", c.corpus},
          {"plane_n_u", c.plane_n_u},
          {"plane_n_y", c.plane_n_y},
          {"tol_scale", c.tol_scale},
          {"seed", c.seed},
          {"escalate_flags", c.escalate_flags}};
}

SuiteReport run_suite(const RunConfig& cfg, const std::string& suite) {
  const auto ids = resolve_suite(suite);
  SuiteContext ctx(cfg);
  ctx.corpus();
  SuiteReport rep;
  rep.suite = suite;
  rep.passed = true;
  Json crit = Json::array();
  for (const auto& id : ids) {
    CriterionResult r = run_criterion(id, ctx);
    rep.passed = rep.passed && r.passed;
    crit.push_back({{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"summary", r.summary}, {"metrics", r.metrics}});
    rep.results.push_back(std::move(r));
  }
  rep.files = ctx.files();
  rep.json = {{"schema_version", kReportSchemaVersion},
              {"suite", suite},
              {"config", config_json(cfg)},
              {"passed", rep.passed},
              {"criteria", crit}};
  return rep;
}

void write_report(const SuiteReport& rep, const std::string& out_dir) {
  const std::string base = out_dir + "/" + rep.suite + "/";
  write_text_file(base + "report.json", dump_json(rep.json));
  for (const auto& [name, content] : rep.files) write_text_file(base + name, content);
}

}  // namespace axb
