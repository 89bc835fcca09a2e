#include "axb/spectral.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>

#include "axb/errors.hpp"
#include "axb/halfline.hpp"
#include "axb/macdonald.hpp"
#include "axb/parallel.hpp"
#include "axb/stencils.hpp"

namespace axb {

SpectralGrid::SpectralGrid(double tau_max, int m) : tau_max_(tau_max), m_(m) {
  if (!(tau_max > 0.0)) throw DomainError("spectral grid requires tau_max > 0");
  if (m < 32) throw DomainError("spectral grid requires m >= 32");
}

Eigen::VectorXd SpectralGrid::weights() const {
  Eigen::VectorXd w = Eigen::VectorXd::Constant(m_, dtau());
  w(0) *= 0.5;
  w(m_ - 1) *= 0.5;
  return w;
}

std::string SpectralGrid::key() const {
  char buf[64];
  std::snprintf(buf, sizeof buf, "tau[%.17g,%d]", tau_max_, m_);
  return buf;
}

KernelTablePtr build_kernel_table(GridPtr grid, const SpectralGrid& sgrid) {
  auto table = std::make_shared<KernelTable>();
  table->grid = grid;
  table->sgrid = sgrid;
  table->k.resize(grid->n(), sgrid.m());
  parallel_for(grid->n(), [&](int i) { table->k.row(i) = macdonald_row(grid->x(i), sgrid.dtau(), sgrid.m()).transpose(); });
  return table;
}

namespace {

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::filesystem::path cache_path(const std::string& key) {
  const char* dir = std::getenv("AXB_CACHE_DIR");
  if (dir == nullptr || *dir == '\0') return {};
  char name[64];
  std::snprintf(name, sizeof name, "kernel_%016llx.bin", static_cast<unsigned long long>(fnv1a(key)));
  return std::filesystem::path(dir) / name;
}

bool load_table(const std::filesystem::path& p, const std::string& key, KernelTable& t) {
  std::ifstream in(p, std::ios::binary);
  if (!in) return false;
  std::uint64_t len = 0;
  in.read(reinterpret_cast<char*>(&len), sizeof len);
  if (!in || len != key.size()) return false;
  std::string stored(len, '\0');
  in.read(stored.data(), static_cast<std::streamsize>(len));
  if (stored != key) return false;
  in.read(reinterpret_cast<char*>(t.k.data()), static_cast<std::streamsize>(t.k.size() * sizeof(double)));
  return static_cast<bool>(in);
}

void store_table(const std::filesystem::path& p, const std::string& key, const KernelTable& t) {
  std::error_code ec;
  std::filesystem::create_directories(p.parent_path(), ec);
  const auto tmp = p.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) return;
    const std::uint64_t len = key.size();
    out.write(reinterpret_cast<const char*>(&len), sizeof len);
    out.write(key.data(), static_cast<std::streamsize>(len));
    out.write(reinterpret_cast<const char*>(t.k.data()), static_cast<std::streamsize>(t.k.size() * sizeof(double)));
  }
  std::filesystem::rename(tmp, p, ec);
}

}  // namespace

KernelTablePtr kernel_table(GridPtr grid, const SpectralGrid& sgrid) {
  static std::mutex mu;
  static std::map<std::string, KernelTablePtr> cache;
  const std::string key = grid->key() + sgrid.key();
  std::lock_guard<std::mutex> lock(mu);
  if (auto it = cache.find(key); it != cache.end()) return it->second;

  KernelTablePtr table;
  const auto path = cache_path(key);
  if (!path.empty()) {
    auto t = std::make_shared<KernelTable>();
    t->grid = grid;
    t->sgrid = sgrid;
    t->k.resize(grid->n(), sgrid.m());
    if (load_table(path, key, *t)) table = t;
  }
  if (!table) {
    table = build_kernel_table(grid, sgrid);
    if (!path.empty()) store_table(path, key, *table);
  }
  cache.emplace(key, table);
  return table;
}

Spectrum kl_forward(const HalfLineFunction& f, const KernelTable& table) {
  if (!f.grid->same_as(*table.grid)) throw GridMismatch("kl_forward: function and kernel table grids differ");
  const Eigen::VectorXcd wf = f.grid->weights().cast<cplx>().cwiseProduct(f.values);
  Eigen::VectorXcd c(table.sgrid.m());
  c.real() = table.k.transpose() * wf.real();
  c.imag() = table.k.transpose() * wf.imag();
  return {table.sgrid, std::move(c)};
}

namespace {

Eigen::VectorXd inverse_weights(const SpectralGrid& sg, double normalization) {
  Eigen::VectorXd w = sg.weights();
  for (int k = 0; k < sg.m(); ++k) {
    const double tau = sg.tau(k);
    w(k) *= normalization * tau * std::sinh(std::numbers::pi * tau);
  }
  return w;
}

}  // namespace

HalfLineFunction kl_inverse(const Spectrum& s, const KernelTable& table) {
  const Eigen::VectorXcd ws = inverse_weights(s.sgrid, table.normalization).cast<cplx>().cwiseProduct(s.coeffs);
  Eigen::VectorXcd v(table.grid->n());
  v.real() = table.k * ws.real();
  v.imag() = table.k * ws.imag();
  return {table.grid, std::move(v)};
}

double kl_energy(const Spectrum& s, double normalization) {
  return inverse_weights(s.sgrid, normalization).dot(s.coeffs.cwiseAbs2());
}

double calibrate_kl_normalization(const std::vector<HalfLineFunction>& corpus, const KernelTable& table) {
  KernelTable unit = table;
  unit.normalization = 1.0;
  double num = 0.0;
  double den = 0.0;
  for (const auto& f : corpus) {
    const HalfLineFunction g = kl_inverse(kl_forward(f, unit), unit);
    num += inner(f, g).real();
    den += inner(g, g).real();
  }
  if (den <= 0.0) throw DomainError("calibration corpus has no spectral content");
  return num / den;
}

Eigen::MatrixXd fourier_derivative_matrix(const LogGrid& grid, const LaplacianOptions& opt) {
  const int n = grid.n();
  const int kmax = n % 2 == 0 ? n / 2 - 1 : (n - 1) / 2;
  const double period = n * grid.h();
  Eigen::VectorXd d = Eigen::VectorXd::Zero(n);
  for (int k = 1; k <= kmax; ++k) {
    const double eta = static_cast<double>(k) / kmax;
    const double sigma = std::exp(-opt.filter_strength * std::pow(eta, opt.filter_order));
    const double kappa = 2.0 * std::numbers::pi * k / period;
    for (int m = 1; m < n; ++m) {
      d(m) -= (2.0 / n) * kappa * sigma * std::sin(2.0 * std::numbers::pi * static_cast<double>(k) * m / n);
    }
  }
  Eigen::MatrixXd D(n, n);
  for (int j = 0; j < n; ++j) {
    for (int l = 0; l < n; ++l) D(j, l) = d(((j - l) % n + n) % n);
  }
  // Exact antisymmetry.
  return 0.5 * (D - D.transpose());
}

DiscreteOperator::DiscreteOperator(GridPtr grid, SpectralDecomposition decomposition)
    : grid_(std::move(grid)), dec_(std::move(decomposition)) {
  const int idx = std::min(dec_.size() - 1, (4 * dec_.size()) / 5);
  resolved_lambda_ = dec_.eigenvalues()(idx);
}

HalfLineFunction DiscreteOperator::eigenvector(int k) const { return {grid_, dec_.eigenvector(k)}; }

Eigen::VectorXcd DiscreteOperator::coefficients(const HalfLineFunction& f) const {
  if (!f.grid->same_as(*grid_)) throw GridMismatch("operator and function grids differ");
  return dec_.coefficients(f.values);
}

HalfLineFunction DiscreteOperator::synthesize(const Eigen::VectorXcd& c) const { return {grid_, dec_.synthesize(c)}; }

OperatorPtr build_matrix_laplacian(GridPtr grid, const LaplacianOptions& opt) {
  if (grid->n() > opt.dense_cap) throw CapacityError("grid exceeds the dense eigensolver cap");
  const Eigen::MatrixXd D = fourier_derivative_matrix(*grid, opt);
  const Eigen::VectorXd& w = grid->weights();
  const Eigen::VectorXd sw = w.cwiseSqrt();
  const Eigen::MatrixXd B = sw.asDiagonal() * D * sw.cwiseInverse().asDiagonal();
  Eigen::MatrixXd S = B.transpose() * B;
  S.diagonal() += grid->x_nodes().cwiseAbs2();
  return std::make_shared<DiscreteOperator>(grid, SpectralDecomposition(w, S));
}

OperatorPtr matrix_laplacian(GridPtr grid) {
  static std::mutex mu;
  static std::map<std::string, OperatorPtr> cache;
  std::lock_guard<std::mutex> lock(mu);
  const std::string key = grid->key();
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  auto op = build_matrix_laplacian(grid);
  cache.emplace(key, op);
  return op;
}

MultiplierResult apply_multiplier(const Multiplier& F, const HalfLineFunction& f, const DiscreteOperator& op) {
  Eigen::VectorXcd c = op.coefficients(f);
  const auto& lam = op.eigenvalues();
  double total = 0.0;
  double outside = 0.0;
  for (int k = 0; k < c.size(); ++k) {
    const double e = std::norm(c(k));
    total += e;
    if (lam(k) > op.resolved_lambda()) outside += e;
    c(k) *= F(lam(k));
  }
  MultiplierResult r{op.synthesize(c), total > 0.0 ? outside / total : 0.0, false};
  r.unresolved = r.unresolved_fraction > 1e-3;
  return r;
}

MultiplierResult apply_multiplier(const Multiplier& F, const HalfLineFunction& f, const KernelTable& table) {
  Spectrum s = kl_forward(f, table);
  const double norm2 = inner(f, f).real();
  const double captured = kl_energy(s, table.normalization);
  for (int k = 0; k < s.coeffs.size(); ++k) {
    const double tau = s.sgrid.tau(k);
    s.coeffs(k) *= F(tau * tau);
  }
  MultiplierResult r{kl_inverse(s, table), 0.0, false};
  r.unresolved_fraction = norm2 > 0.0 ? std::max(0.0, 1.0 - captured / norm2) : 0.0;
  r.unresolved = r.unresolved_fraction > 1e-3;
  return r;
}

SpectralMeasure spectral_measure(const HalfLineFunction& f, const DiscreteOperator& op) {
  const Eigen::VectorXcd c = op.coefficients(f);
  return {op.eigenvalues(), c.cwiseAbs2()};
}

HalfLineFunction apply_laplacian_fd(const HalfLineFunction& f, int fd_order) {
  const auto st = central_stencil(2, fd_order);
  const int w = st.half_width();
  const int n = f.size();
  const double inv_h2 = 1.0 / (f.grid->h() * f.grid->h());
  Eigen::VectorXcd out(n);
  for (int i = 0; i < n; ++i) {
    cplx acc = 0.0;
    for (int k = -w; k <= w; ++k) {
      const int src = i + k;
      if (src >= 0 && src < n) acc += st.coeffs[w + k] * f.values(src);
    }
    const double x = f.grid->x(i);
    out(i) = -acc * inv_h2 + x * x * f.values(i);
  }
  return {f.grid, std::move(out)};
}

}  // namespace axb
