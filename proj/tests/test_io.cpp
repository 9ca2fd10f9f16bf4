#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <limits>
#include <sstream>

#include "boundfuel/app/experiments.hpp"
#include "boundfuel/app/verify.hpp"
#include "boundfuel/io/config.hpp"
#include "boundfuel/io/curve.hpp"

using namespace boundfuel;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("boundfuel_test_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

}  // namespace

TEST_SUITE("io") {
  TEST_CASE("number formatting round trips") {
    for (double v : {0.0, 1.0, -2.5, 1e-300, 0.1 + 0.2, 123456.789012345})
      CHECK(std::abs(parse_number(format_number(v)) - v) <= 1e-11 * std::abs(v));
    CHECK(format_number(std::numeric_limits<double>::infinity()) == "inf");
    CHECK(format_number(-std::numeric_limits<double>::infinity()) == "-inf");
    CHECK(std::isnan(parse_number(format_number(std::nan("")))));
    CHECK_THROWS(parse_number("abc"));
  }

  TEST_CASE("csv round trip") {
    CurveOutput c("demo", "x", {0.0, 0.5, 1.0});
    c.add_column("y", {1.0, std::numeric_limits<double>::infinity(), -3.25});
    c.add_column("z", {0.0, 0.0, 1e-7});
    CHECK_THROWS(c.add_column("y", {1.0, 2.0, 3.0}));
    CHECK_THROWS(c.add_column("w", {1.0}));
    const auto back = CurveOutput::from_csv("demo", c.to_csv());
    CHECK(back.parameter() == "x");
    CHECK(back.grid() == c.grid());
    CHECK(back.column("y") == c.column("y"));
    CHECK(back.column("z") == c.column("z"));
    CHECK(back.to_csv() == c.to_csv());
  }

  TEST_CASE("sign changes interpolate") {
    const auto grid = linspace(0.0, 1.0, 11);
    std::vector<double> v;
    for (double x : grid) v.push_back(x - 0.33);
    const auto z = sign_changes(grid, v);
    REQUIRE(z.size() == 1);
    CHECK(z[0] == doctest::Approx(0.33));
    CHECK(sign_changes(grid, std::vector<double>(11, 1.0)).empty());
    CHECK(linspace(2.0, 3.0, 1) == std::vector<double>{2.0});
  }

  TEST_CASE("config parsing") {
    const auto cfg = parse_config(
        "[experiment]\nid = micromaser_eps\noutput_dir = here\n"
        "[physics]\nnbar_th = 0.1\nfock_dim = 30\ncollision_mode = monte_carlo\nseed = 9\n"
        "[sweep]\nvalues = 0, 0.5, 1\n"
        "[tolerances]\nkraus = 1e-8\n");
    CHECK(cfg.id == "micromaser_eps");
    CHECK(cfg.output_dir == "here");
    CHECK(cfg.cavity.nbar_th == 0.1);
    CHECK(cfg.cavity.fock_dim == 30);
    CHECK(cfg.monte_carlo);
    CHECK(cfg.seed == 9);
    CHECK(cfg.values == std::vector<double>{0.0, 0.5, 1.0});
    CHECK(cfg.tolerances.kraus == 1e-8);
    CHECK(sweep_grid(cfg, 0.0, 1.0, 5) == std::vector<double>{0.0, 0.25, 0.5, 0.75, 1.0});
  }

  TEST_CASE("config rejects unknown input") {
    CHECK_THROWS_AS(parse_config("[experiment]\nid = table1\ncolour = red\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("[experiment]\nid = table1\n[extra]\nk = 1\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("[physics]\nnbar_th = 0.1\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("[experiment]\nid = table1\n[physics]\nfock_dim = many\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("[experiment]\nid = table1\n[physics]\ncollision_mode = fast\n"), ConfigError);
  }

  TEST_CASE("hash") {
    CHECK(fnv1a("") == 0xcbf29ce484222325ULL);
    CHECK(fnv1a("a") == 0xaf63dc4c8601ec8cULL);
    CHECK(hex64(0xabcULL) == "0000000000000abc");
  }

  TEST_CASE("runs are deterministic and verify against themselves") {
    const auto a = scratch("run_a"), b = scratch("run_b");
    auto cfg = parse_config("[experiment]\nid = ergotropy_fls\n[sweep]\npoints = 11\n");
    std::ostringstream log;
    cfg.output_dir = a.string();
    const auto s1 = run_experiment(cfg, log);
    cfg.output_dir = b.string();
    run_experiment(cfg, log);
    CHECK(fs::exists(a / "manifest.json"));
    for (const auto& f : s1.files)
      if (f != "manifest.json") CHECK(read_file((a / f).string()) == read_file((b / f).string()));
    CHECK(verify_outputs(a.string(), b.string()).pass());
  }

  TEST_CASE("verify reports deviations and shape mismatches") {
    const auto a = scratch("ver_a"), b = scratch("ver_b");
    CurveOutput c("curve", "x", {0.0, 1.0});
    c.add_column("y", {1.0, 2.0});
    write_file_atomic((a / "curve.csv").string(), c.to_csv());
    CurveOutput d("curve", "x", {0.0, 1.0});
    d.add_column("y", {1.0, 2.0 + 1e-6});
    write_file_atomic((b / "curve.csv").string(), d.to_csv());
    const auto r = verify_outputs(a.string(), b.string());
    CHECK(!r.pass());
    CHECK(verify_outputs(a.string(), b.string(), 1e-5).pass());
    CurveOutput e("curve", "x", {0.0});
    e.add_column("y", {1.0});
    write_file_atomic((b / "curve.csv").string(), e.to_csv());
    const auto r2 = verify_outputs(a.string(), b.string(), 1.0);
    CHECK(!r2.pass());
    CHECK(!r2.problems.empty());
    fs::remove(b / "curve.csv");
    CHECK(!verify_outputs(a.string(), b.string(), 1.0).pass());
  }

  TEST_CASE("experiment registry") {
    CHECK(experiments().size() == 9);
    auto cfg = parse_config("[experiment]\nid = nonsense\n");
    std::ostringstream log;
    CHECK_THROWS(run_experiment(cfg, log));
  }
}
