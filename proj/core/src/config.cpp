#include "axb/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "axb/corpus.hpp"
#include "axb/errors.hpp"

namespace axb {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

double to_double(const std::string& key, const std::string& v) {
  try {
    std::size_t pos = 0;
    const double d = std::stod(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return d;
  } catch (const std::exception&) {
    throw ConfigError(key, "expected a number, got '" + v + "'");
  }
}

long long to_int(const std::string& key, const std::string& v) {
  long long out = 0;
  const auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || p != v.data() + v.size()) throw ConfigError(key, "expected an integer, got '" + v + "'");
  return out;
}

bool to_bool(const std::string& key, const std::string& v) {
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw ConfigError(key, "expected true or false, got '" + v + "'");
}

std::string join(const std::vector<std::string>& v, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
  return out;
}

std::string num(double d) {
  std::ostringstream os;
  os.precision(17);
  os << d;
  return os.str();
}

}  // namespace

RunConfig default_config() {
  RunConfig c;
  for (const auto& e : default_corpus()) c.corpus.push_back(e.id());
  return c;
}

void apply_setting(RunConfig& cfg, const std::string& key, const std::string& value) {
  const std::string v = trim(value);
  if (key == "grid.n") cfg.grid_n = static_cast<int>(to_int(key, v));
  else if (key == "grid.u_min") cfg.u_min = to_double(key, v);
  else if (key == "grid.u_max") cfg.u_max = to_double(key, v);
  else if (key == "grid.refine_n") cfg.refine_n = static_cast<int>(to_int(key, v));
  else if (key == "grid.oracle_n") cfg.oracle_n = static_cast<int>(to_int(key, v));
  else if (key == "spectral.tau_max") cfg.tau_max = to_double(key, v);
  else if (key == "spectral.m") cfg.spectral_m = static_cast<int>(to_int(key, v));
  else if (key == "corpus") {
    cfg.corpus = split(v, ';');
    for (const auto& id : cfg.corpus) {
      try {
        parse_corpus_entry(id);
      } catch (const std::exception& e) {
        throw ConfigError(key, e.what());
      }
    }
  } else if (key == "plane.n_u") cfg.plane_n_u = static_cast<int>(to_int(key, v));
  else if (key == "plane.n_y") cfg.plane_n_y = static_cast<int>(to_int(key, v));
  else if (key == "suites") cfg.suites = split(v, ',');
  else if (key == "tol_scale") cfg.tol_scale = to_double(key, v);
  else if (key == "seed") cfg.seed = static_cast<unsigned long long>(to_int(key, v));
  else if (key == "out") cfg.out_dir = v;
  else if (key == "escalate_flags") cfg.escalate_flags = to_bool(key, v);
  else throw ConfigError(key, "unknown configuration key");
}

void validate(const RunConfig& c) {
  if (c.grid_n < 16 || c.grid_n > 2048) throw ConfigError("grid.n", "must lie in [16, 2048]");
  if (c.refine_n < 16 || c.refine_n > 2048) throw ConfigError("grid.refine_n", "must lie in [16, 2048]");
  if (c.oracle_n < 16 || c.oracle_n > 8192) throw ConfigError("grid.oracle_n", "must lie in [16, 8192]");
  if (!(c.u_max > c.u_min)) throw ConfigError("grid.u_max", "must exceed grid.u_min");
  if (!(c.tau_max > 0.0)) throw ConfigError("spectral.tau_max", "must be positive");
  if (c.spectral_m < 2) throw ConfigError("spectral.m", "must be >= 2");
  if (c.plane_n_u < 16 || c.plane_n_y < 16 || c.plane_n_u * c.plane_n_y > 4096) {
    throw ConfigError("plane.n_u", "half-plane grid must have 16..64 nodes per axis and at most 4096 in total");
  }
  if (!(c.tol_scale > 0.0)) throw ConfigError("tol_scale", "must be positive");
  if (c.suites.empty()) throw ConfigError("suites", "no suite selected");
}

RunConfig parse_config(std::istream& in) {
  RunConfig cfg = default_config();
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(line, "line " + std::to_string(lineno) + " is not of the form key = value");
    }
    apply_setting(cfg, trim(line.substr(0, eq)), line.substr(eq + 1));
  }
  validate(cfg);
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config", "cannot open '" + path + "'");
  return parse_config(in);
}

std::string to_text(const RunConfig& c) {
  std::ostringstream os;
  os << "grid.n = " << c.grid_n << "\n"
     << "grid.u_min = " << num(c.u_min) << "\n"
     << "grid.u_max = " << num(c.u_max) << "\n"
     << "grid.refine_n = " << c.refine_n << "\n"
     << "grid.oracle_n = " << c.oracle_n << "\n"
     << "spectral.tau_max = " << num(c.tau_max) << "\n"
     << "spectral.m = " << c.spectral_m << "\n"
     << "corpus = " << join(c.corpus, "; ") << "\n"
     << "plane.n_u = " << c.plane_n_u << "\n"
     << "plane.n_y = " << c.plane_n_y << "\n"
     << "suites = " << join(c.suites, ", ") << "\n"
     << "tol_scale = " << num(c.tol_scale) << "\n"
     << "seed = " << c.seed << "\n"
     << "out = " << c.out_dir << "\n"
     << "escalate_flags = " << (c.escalate_flags ? "true" : "false") << "\n";
  return os.str();
}

}  // namespace axb
