#include "boundfuel/app/experiments.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>

#include <json.hpp>

#include "boundfuel/app/acceptance.hpp"
#include "boundfuel/core/errors.hpp"
#include "boundfuel/ergotropy/ergotropy.hpp"
#include "boundfuel/micromaser/collision.hpp"
#include "boundfuel/singleshot/central_spin.hpp"
#include "boundfuel/states/states.hpp"

namespace boundfuel {

namespace {

constexpr const char* kVersion = "1.0.0";

struct Writer {
  std::string dir;
  RunSummary summary;
  nlohmann::json files = nlohmann::json::array();

  void curve(const CurveOutput& c) {
    const std::string name = c.name() + ".csv";
    write_file_atomic(dir + "/" + name, c.to_csv());
    nlohmann::json meta = nlohmann::json::object();
    for (const auto& [k, v] : c.metadata()) meta[k] = v;
    nlohmann::json cols = nlohmann::json::array({c.parameter()});
    for (const auto& col : c.columns()) cols.push_back(col.first);
    files.push_back({{"name", name}, {"rows", c.rows()}, {"columns", cols}, {"metadata", meta}});
    summary.files.push_back(name);
  }

  void json(const std::string& name, const nlohmann::json& j) {
    write_file_atomic(dir + "/" + name, j.dump(2) + "\n");
    files.push_back({{"name", name}});
    summary.files.push_back(name);
  }

  void text(const std::string& name, const std::string& body) {
    write_file_atomic(dir + "/" + name, body);
    files.push_back({{"name", name}});
    summary.files.push_back(name);
  }
};

std::string tag(const char* prefix, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%s%.2f", prefix, v);
  return buf;
}

void check_states(const ExperimentConfig& cfg, std::initializer_list<DensityMatrix> states) {
  for (const auto& s : states) validate_density(s.matrix(), cfg.tolerances);
}

void run_dsd(const ExperimentConfig& cfg, Writer& w) {
  const std::vector<double> alphas = cfg.values.empty() ? std::vector<double>{2.0, 3.25, 4.2} : cfg.values;
  const auto times = sweep_grid(cfg, 0.0, 1.0, 1001);
  nlohmann::json crossings = nlohmann::json::array();
  for (double a : alphas) {
    const DensityMatrix rho0 = horodecki_state(a);
    check_states(cfg, {rho0});
    CurveOutput c = ergotropy_dynamics(rho0, 1.0, 0.5, times, cfg.dt);
    std::vector<double> neg_mpt;
    for (double v : c.column("min_pt_eigenvalue")) neg_mpt.push_back(-v);
    const auto death = sign_changes(c.grid(), neg_mpt);
    const auto real = sign_changes(c.grid(), c.column("realignment"));
    c = [&] {
      CurveOutput named(tag("dsd_alpha_", a), c.parameter(), c.grid());
      for (const auto& col : c.columns()) named.add_column(col.first, col.second);
      return named;
    }();
    c.metadata()["gamma_u_over_gamma_e"] = "0.5";
    w.curve(c);
    crossings.push_back({{"alpha", a}, {"negativity_zero", death}, {"realignment_sign_changes", real}});
  }
  w.json("dsd_crossings.json", crossings);
}

void run_singleshot(const ExperimentConfig& cfg, Writer& w) {
  const std::vector<double> eps = cfg.values.empty() ? std::vector<double>{0.0, 0.25, 0.5, 0.75, 1.0} : cfg.values;
  const auto taus = sweep_grid(cfg, 0.0, 100.0, 2001);
  std::vector<double> overlay;
  for (double e : eps) overlay.push_back(repeated_interaction_temperature(e, cfg.cavity));
  for (const auto& c : single_shot_sweep(eps, taus, overlay)) w.curve(c);
}

void run_table1(const ExperimentConfig& cfg, Writer& w) {
  const double p = cfg.exposure.gadc_p(cfg.cavity.nbar_th);
  const auto rows = table1(cfg.cavity, p);
  const std::vector<DensityMatrix> states{smolin_state(), fls_state(0.0), fls_state(0.5),
                                          fls_state(1.0), plus_product_4(), maximally_mixed_4()};
  nlohmann::json out = nlohmann::json::array();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    nlohmann::json j{{"state", r.state}, {"C", r.C},           {"delta", r.delta}, {"T_kelvin", r.T_kelvin},
                     {"lambda_abs", r.lambda_abs}, {"xi_abs", r.xi_abs}, {"gibbsian", r.gibbsian}};
    if (r.gibbsian) {
      CollisionOptions opt;
      opt.g_tau = cfg.g_tau;
      opt.fock_dim = cfg.cavity.fock_dim;
      opt.seed = cfg.seed;
      opt.monte_carlo = cfg.monte_carlo;
      const auto sim = collision_simulate(expose(states[i], p, cfg.cavity.nbar_th), cfg.cavity, opt);
      j["T_collision_kelvin"] = sim.kelvin;
    } else {
      j["T_collision_kelvin"] = nullptr;
    }
    out.push_back(j);
  }
  w.json("table1.json", out);
}

void run_acceptance(Writer& w, std::ostream& log) {
  std::string report;
  nlohmann::json j = nlohmann::json::array();
  for (int i = 1; i <= kCriterionCount; ++i) {
    const auto r = evaluate_criterion(i);
    const std::string line = format_criterion(r);
    log << line << "\n";
    report += line + "\n";
    j.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
  }
  w.text("acceptance.txt", report);
  w.json("acceptance.json", j);
}

}  // namespace

const std::vector<ExperimentInfo>& experiments() {
  static const std::vector<ExperimentInfo> list{
      {"ergotropy_fls", "ergotropy of the FLS family against its piecewise closed form"},
      {"ergotropy_horodecki", "ergotropy of the Horodecki family against the quoted branches"},
      {"dsd_dynamics", "two-qutrit amplitude damping: ergotropy, negativity, realignment"},
      {"singleshot", "central-spin single-shot heat transfer per eps"},
      {"micromaser_ttr", "cavity temperature against atom exposure time"},
      {"micromaser_eps", "cavity temperature against FLS eps"},
      {"micromaser_qutrit", "cavity temperature pumped by Horodecki qutrit pairs"},
      {"table1", "pump coefficients and temperatures for the reference clusters"},
      {"acceptance", "evaluate every acceptance criterion"},
  };
  return list;
}

std::string resolve_output_dir(const ExperimentConfig& cfg) {
  if (const char* env = std::getenv("BOUNDFUEL_OUTPUT_DIR"); env != nullptr && *env != '\0') return env;
  return cfg.output_dir;
}

RunSummary run_experiment(const ExperimentConfig& cfg, std::ostream& log) {
  Writer w;
  w.dir = resolve_output_dir(cfg);
  std::filesystem::create_directories(w.dir);
  w.summary.output_dir = w.dir;
  const std::string& id = cfg.id;
  if (id == "ergotropy_fls") {
    w.curve(ergotropy_curve_fls(sweep_grid(cfg, 0.0, 1.0, 101)));
  } else if (id == "ergotropy_horodecki") {
    w.curve(ergotropy_curve_horodecki(sweep_grid(cfg, 2.0, 5.0, 301)));
  } else if (id == "dsd_dynamics") {
    run_dsd(cfg, w);
  } else if (id == "singleshot") {
    run_singleshot(cfg, w);
  } else if (id == "micromaser_ttr") {
    const auto ttr = cfg.values.empty() ? sweep_grid(cfg, 0.0, 2.0e6, 401) : cfg.values;
    w.curve(temperature_vs_ttr(fig7_family(), ttr, cfg.cavity, cfg.exposure.gamma_mhz));
  } else if (id == "micromaser_eps") {
    w.curve(temperature_vs_eps(sweep_grid(cfg, 0.0, 1.0, 101), cfg.cavity, cfg.exposure.gadc_p(cfg.cavity.nbar_th)));
  } else if (id == "micromaser_qutrit") {
    w.curve(qutrit_temperature_curve(sweep_grid(cfg, 2.0, 5.0, 301), cfg.cavity));
  } else if (id == "table1") {
    run_table1(cfg, w);
  } else if (id == "acceptance") {
    run_acceptance(w, log);
  } else {
    throw ConfigError("unknown experiment id '" + id + "'");
  }
  const nlohmann::json manifest{{"experiment", id},
                                {"config_hash", hex64(fnv1a(cfg.source))},
                                {"seed", cfg.seed},
                                {"version", kVersion},
                                {"files", w.files}};
  write_file_atomic(w.dir + "/manifest.json", manifest.dump(2) + "\n");
  w.summary.files.push_back("manifest.json");
  for (const auto& f : w.summary.files) log << "wrote " << w.dir << "/" << f << "\n";
  return w.summary;
}

}  // namespace boundfuel
