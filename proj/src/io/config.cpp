#include "boundfuel/io/config.hpp"

#include <cstdio>
#include <map>
#include <set>
#include <sstream>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "boundfuel/io/curve.hpp"

namespace boundfuel {

namespace {

const std::map<std::string, std::set<std::string>>& schema() {
  static const std::map<std::string, std::set<std::string>> s{
      {"experiment", {"id", "output_dir"}},
      {"physics", {"omega_c_ghz", "kappa_over_mu", "nbar_th", "gamma_mhz", "t_tr_ns", "g_tau", "fock_dim", "seed", "collision_mode"}},
      {"sweep", {"start", "stop", "points", "values", "dt"}},
      {"tolerances", {"hermitian", "trace", "positivity", "spectral", "unitary", "kraus"}},
  };
  return s;
}

double to_double(const std::string& key, const std::string& v) {
  try {
    return parse_number(v);
  } catch (const std::exception&) {
    throw ConfigError("config: '" + key + "' is not a number: " + v);
  }
}

long to_integer(const std::string& key, const std::string& v) {
  std::size_t used = 0;
  long out = 0;
  try {
    out = std::stol(v, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != v.size()) throw ConfigError("config: '" + key + "' is not an integer: " + v);
  return out;
}

}  // namespace

ExperimentConfig parse_config(const std::string& text) {
  namespace pt = boost::property_tree;
  pt::ptree tree;
  std::istringstream in(text);
  try {
    pt::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  ExperimentConfig cfg;
  cfg.source = text;
  for (const auto& [section, body] : tree) {
    const auto it = schema().find(section);
    if (it == schema().end()) {
      if (body.empty()) throw ConfigError("config: key '" + section + "' outside a section");
      throw ConfigError("config: unknown section [" + section + "]");
    }
    for (const auto& [key, node] : body) {
      if (!it->second.count(key)) throw ConfigError("config: unknown key '" + key + "' in [" + section + "]");
      const std::string v = node.get_value<std::string>();
      const std::string name = section + "." + key;
      if (section == "experiment") {
        if (key == "id") cfg.id = v;
        if (key == "output_dir") cfg.output_dir = v;
      } else if (section == "physics") {
        if (key == "omega_c_ghz") cfg.cavity.omega_c_ghz = to_double(name, v);
        if (key == "kappa_over_mu") cfg.cavity.kappa_over_mu = to_double(name, v);
        if (key == "nbar_th") cfg.cavity.nbar_th = to_double(name, v);
        if (key == "gamma_mhz") cfg.exposure.gamma_mhz = to_double(name, v);
        if (key == "t_tr_ns") cfg.exposure.t_tr_ns = to_double(name, v);
        if (key == "g_tau") cfg.g_tau = to_double(name, v);
        if (key == "fock_dim") cfg.cavity.fock_dim = static_cast<int>(to_integer(name, v));
        if (key == "seed") cfg.seed = static_cast<std::uint64_t>(to_integer(name, v));
        if (key == "collision_mode") {
          if (v != "deterministic" && v != "monte_carlo")
            throw ConfigError("config: collision_mode must be deterministic or monte_carlo");
          cfg.monte_carlo = v == "monte_carlo";
        }
      } else if (section == "sweep") {
        if (key == "start") cfg.start = to_double(name, v);
        if (key == "stop") cfg.stop = to_double(name, v);
        if (key == "points") cfg.points = static_cast<int>(to_integer(name, v));
        if (key == "dt") cfg.dt = to_double(name, v);
        if (key == "values") {
          std::stringstream ss(v);
          std::string item;
          while (std::getline(ss, item, ',')) {
            const auto b = item.find_first_not_of(" \t");
            const auto e = item.find_last_not_of(" \t");
            if (b == std::string::npos) throw ConfigError("config: empty entry in sweep.values");
            cfg.values.push_back(to_double(name, item.substr(b, e - b + 1)));
          }
        }
      } else if (section == "tolerances") {
        const double x = to_double(name, v);
        if (!(x > 0.0)) throw ConfigError("config: tolerance must be positive: " + name);
        if (key == "hermitian") cfg.tolerances.hermitian = x;
        if (key == "trace") cfg.tolerances.trace = x;
        if (key == "positivity") cfg.tolerances.positivity = x;
        if (key == "spectral") cfg.tolerances.spectral = x;
        if (key == "unitary") cfg.tolerances.unitary = x;
        if (key == "kraus") cfg.tolerances.kraus = x;
      }
    }
  }
  if (cfg.id.empty()) throw ConfigError("config: [experiment] id is required");
  if (cfg.points && *cfg.points < 1) throw ConfigError("config: sweep.points must be >= 1");
  if (cfg.cavity.fock_dim < 2) throw ConfigError("config: fock_dim must be >= 2");
  return cfg;
}

ExperimentConfig load_config(const std::string& path) { return parse_config(read_file(path)); }

std::uint64_t fnv1a(const std::string& data) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  char buf[20];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

std::vector<double> sweep_grid(const ExperimentConfig& cfg, double start, double stop, int points) {
  return linspace(cfg.start.value_or(start), cfg.stop.value_or(stop), cfg.points.value_or(points));
}

}  // namespace boundfuel
