#include <exception>
#include <iostream>

#include <CLI11.hpp>

#include "boundfuel/app/experiments.hpp"
#include "boundfuel/app/verify.hpp"
#include "boundfuel/core/errors.hpp"

int main(int argc, char** argv) {
  CLI::App app{"boundfuel: work and heat from bound-entangled clusters"};
  app.require_subcommand(1);

  std::string config_path;
  auto* run = app.add_subcommand("run", "run one experiment from a config file");
  run->add_option("config", config_path, "INI config file")->required()->check(CLI::ExistingFile);

  std::string ref_dir, out_dir;
  double tol = 1e-9;
  auto* verify = app.add_subcommand("verify", "compare produced outputs with reference outputs");
  verify->add_option("reference", ref_dir, "reference directory")->required();
  verify->add_option("produced", out_dir, "produced directory")->required();
  verify->add_option("--tol", tol, "max absolute deviation per column");

  auto* list = app.add_subcommand("list-experiments", "print experiment ids");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) {
      const auto cfg = boundfuel::load_config(config_path);
      boundfuel::run_experiment(cfg, std::cout);
      return 0;
    }
    if (*verify) {
      const auto rep = boundfuel::verify_outputs(ref_dir, out_dir, tol);
      std::cout << rep.to_text();
      return rep.pass() ? 0 : 1;
    }
    if (*list) {
      for (const auto& e : boundfuel::experiments()) std::cout << e.id << "\t" << e.description << "\n";
      return 0;
    }
  } catch (const boundfuel::PhysicsError& e) {
    std::cerr << "precondition failed: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
