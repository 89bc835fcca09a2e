#pragma once

#include <string>
#include <utility>
#include <vector>

#include "axb/grid.hpp"
#include "axb/spectral.hpp"

namespace axb {

/// Named test function with parameters. `decaying` marks functions that vanish
/// at both window ends (the kernel transform and tail-free identities apply).
struct CorpusEntry {
  std::string family;
  std::vector<std::pair<std::string, double>> params;
  bool decaying = true;

  double param(const std::string& name) const;
  /// "family:k=v,k=v" with values printed to 17 significant digits when needed.
  std::string id() const;
};

/// power_exp, log_gaussian, macdonald, bandlimited_random.
std::vector<std::string> corpus_families();

/// Parses "family:k=v,..."; missing parameters take family defaults.
CorpusEntry parse_corpus_entry(const std::string& text);

/// Default decaying corpus used by the suites.
std::vector<CorpusEntry> default_corpus();

/// Samples the entry on the grid. Band-limited members need the matrix operator
/// of the grid; it is built (and cached) when op is null.
HalfLineFunction realize(const CorpusEntry& e, const GridPtr& grid, const DiscreteOperator* op = nullptr);

/// Random combination of eigenvectors with sqrt(lambda) <= omega, unit norm.
HalfLineFunction bandlimited_random(const DiscreteOperator& op, double omega, int terms, unsigned long long seed);

}  // namespace axb
