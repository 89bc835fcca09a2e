#include "axb/corpus.hpp"

#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>

#include "axb/errors.hpp"
#include "axb/halfline.hpp"
#include "axb/macdonald.hpp"

namespace axb {

namespace {

struct FamilyInfo {
  const char* name;
  std::vector<std::pair<std::string, double>> defaults;
  bool decaying;
};

const std::vector<FamilyInfo>& families() {
  static const std::vector<FamilyInfo> f = {
      {"power_exp", {{"alpha", 1.0}, {"beta", 1.0}}, true},
      {"log_gaussian", {{"u0", 0.0}, {"sigma", 1.0}}, true},
      {"macdonald", {{"tau", 1.0}}, false},
      {"bandlimited_random", {{"omega", 4.0}, {"terms", 12.0}, {"seed", 1.0}}, false},
  };
  return f;
}

const FamilyInfo& family_info(const std::string& name) {
  for (const auto& f : families()) {
    if (name == f.name) return f;
  }
  throw UnknownName("unknown corpus family '" + name + "'");
}

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  std::string shortest = buf;
  for (int prec = 1; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof buf, "%.*g", prec, v);
    if (std::strtod(buf, nullptr) == v) return buf;
  }
  return shortest;
}

}  // namespace

double CorpusEntry::param(const std::string& name) const {
  for (const auto& [k, v] : params) {
    if (k == name) return v;
  }
  throw UnknownName("corpus entry " + family + " has no parameter '" + name + "'");
}

std::string CorpusEntry::id() const {
  std::string out = family + ":";
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i) out += ",";
    out += params[i].first + "=" + format_number(params[i].second);
  }
  return out;
}

std::vector<std::string> corpus_families() {
  std::vector<std::string> out;
  for (const auto& f : families()) out.emplace_back(f.name);
  return out;
}

CorpusEntry parse_corpus_entry(const std::string& text) {
  const auto colon = text.find(':');
  CorpusEntry e;
  e.family = text.substr(0, colon);
  const auto& info = family_info(e.family);
  e.params = info.defaults;
  e.decaying = info.decaying;
  if (colon == std::string::npos) return e;
  std::stringstream ss(text.substr(colon + 1));
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw DomainError("corpus parameter without value: " + item);
    const std::string key = item.substr(0, eq);
    char* end = nullptr;
    const double value = std::strtod(item.c_str() + eq + 1, &end);
    if (end == item.c_str() + eq + 1 || *end != '\0') throw DomainError("bad corpus parameter value: " + item);
    bool found = false;
    for (auto& [k, v] : e.params) {
      if (k == key) {
        v = value;
        found = true;
      }
    }
    if (!found) throw UnknownName("corpus family " + e.family + " has no parameter '" + key + "'");
  }
  return e;
}

std::vector<CorpusEntry> default_corpus() {
  return {
      parse_corpus_entry("power_exp:alpha=1,beta=1"),
      parse_corpus_entry("power_exp:alpha=2,beta=1"),
      parse_corpus_entry("log_gaussian:u0=0,sigma=1"),
      parse_corpus_entry("log_gaussian:u0=-2,sigma=0.7"),
      parse_corpus_entry("log_gaussian:u0=1,sigma=0.5"),
      parse_corpus_entry("bandlimited_random:omega=4,terms=12,seed=1"),
  };
}

HalfLineFunction bandlimited_random(const DiscreteOperator& op, double omega, int terms, unsigned long long seed) {
  const auto& lam = op.eigenvalues();
  std::vector<int> band;
  for (int k = 0; k < lam.size(); ++k) {
    if (std::sqrt(std::max(lam(k), 0.0)) <= omega) band.push_back(k);
  }
  if (band.empty()) throw DomainError("no eigenvalues inside the requested band");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  Eigen::VectorXcd c = Eigen::VectorXcd::Zero(op.size());
  // The highest `terms` eigenvectors of the band carry random complex weights.
  const int count = std::min<int>(terms, static_cast<int>(band.size()));
  for (int i = 0; i < count; ++i) {
    const int k = band[band.size() - 1 - i];
    c(k) = cplx(unit(rng), unit(rng));
  }
  c /= c.norm();
  return op.synthesize(c);
}

HalfLineFunction realize(const CorpusEntry& e, const GridPtr& grid, const DiscreteOperator* op) {
  if (e.family == "power_exp") {
    const double a = e.param("alpha");
    const double b = e.param("beta");
    return HalfLineFunction::sample(grid, [a, b](double x) { return cplx(std::pow(x, a) * std::exp(-b * x)); });
  }
  if (e.family == "log_gaussian") {
    const double u0 = e.param("u0");
    const double s = e.param("sigma");
    return HalfLineFunction::sample(grid, [u0, s](double x) {
      const double d = std::log(x) - u0;
      return cplx(std::exp(-d * d / (2.0 * s * s)));
    });
  }
  if (e.family == "macdonald") {
    const double tau = e.param("tau");
    return HalfLineFunction::sample(grid, [tau](double x) { return cplx(macdonald_kernel(tau, x)); });
  }
  if (e.family == "bandlimited_random") {
    OperatorPtr owned;
    if (op == nullptr) {
      owned = matrix_laplacian(grid);
      op = owned.get();
    }
    return bandlimited_random(*op, e.param("omega"), static_cast<int>(e.param("terms")),
                              static_cast<unsigned long long>(e.param("seed")));
  }
  throw UnknownName("unknown corpus family '" + e.family + "'");
}

}  // namespace axb
