// frictionless design|simulate|validate|sweep --config <path> --out <dir> [--jobs n]
// Exit codes: 0 success, 2 configuration error, 3 numerical failure.

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <thread>

#include "frictionless/config.hpp"
#include "frictionless/errors.hpp"
#include "frictionless/workflows.hpp"

namespace fs = std::filesystem;
using namespace frictionless;

int main(int argc, char** argv) {
  CLI::App app{"Frictionless trap expansion of a condensate: design, simulate, validate, sweep"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "key=value run configuration")->required();
    sub->add_option("--out", out_dir, "output directory (default: out_dir from the config, else .)");
  };
  auto* design = app.add_subcommand("design", "write b(t), omega^2(t), tau(t) and g(t)/g0 tables");
  auto* simulate = app.add_subcommand("simulate", "propagate the ground state and record snapshots");
  auto* validate = app.add_subcommand("validate", "run the frictionless check and write a report");
  auto* sweep = app.add_subcommand("sweep", "regime x ansatz x g_tilde summary");
  for (auto* s : {design, simulate, validate, sweep}) add_common(s);
  sweep->add_option("--jobs", jobs, "concurrent runs")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    const auto cfg = load_config(config_path);
    fs::path out = !out_dir.empty() ? fs::path(out_dir) : (!cfg.outDir.empty() ? fs::path(cfg.outDir) : fs::path("."));
    fs::create_directories(out);

    if (*design) {
      for (const auto& p : cmd_design(cfg, out)) std::cout << p.string() << '\n';
    } else if (*simulate) {
      cmd_simulate(cfg, out);
      std::cout << (out / "observables.csv").string() << '\n';
    } else if (*validate) {
      const auto report = cmd_validate(cfg, out);
      std::cout << report.to_text();
    } else if (*sweep) {
      std::cout << cmd_sweep(cfg, out, jobs).string() << '\n';
    }
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
