// SPDX-License-Identifier: Apache-2.0
// swipt-alloc <experiment> --config <file> [--seed N] [--trials N] [--out DIR]
#include <exception>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "swipt/harness.hpp"

int main(int argc, char** argv) {
  CLI::App app{"SWIPT resource allocation experiments"};
  std::string experiment, config_path, out_dir;
  std::optional<std::uint64_t> seed;
  std::optional<int> trials, workers;
  std::vector<std::string> overrides;
  app.add_option("experiment", experiment, "moop-region | moop-pairwise | secure-sweep | solver-selftest")
      ->required();
  app.add_option("--config", config_path, "key = value configuration file");
  app.add_option("--seed", seed, "base seed");
  app.add_option("--trials", trials, "channel realizations");
  app.add_option("--out", out_dir, "output directory");
  app.add_option("--workers", workers, "worker threads (output does not depend on this)");
  app.add_option("--set", overrides, "extra key=value override, repeatable");
  app.set_version_flag("--version", swipt::harness::version());
  CLI11_PARSE(app, argc, argv);

  try {
    const auto e = swipt::harness::parse_experiment(experiment);
    auto cfg = config_path.empty() ? swipt::harness::defaults(e) : swipt::harness::load_config(e, config_path);
    for (const auto& kv : overrides) swipt::harness::apply_text(cfg, kv, "--set");
    if (seed) cfg.seed = *seed;
    if (trials) cfg.trials = *trials;
    if (workers) cfg.workers = *workers;
    if (!out_dir.empty()) cfg.out_dir = out_dir;
    return swipt::harness::run(cfg, std::cerr);
  } catch (const std::invalid_argument& ex) {
    std::cerr << "swipt-alloc: " << ex.what() << "\n";
    return 1;
  } catch (const std::exception& ex) {
    std::cerr << "swipt-alloc: " << ex.what() << "\n";
    return 4;
  }
}
