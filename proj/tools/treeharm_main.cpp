// Experiment harness for harmonic analysis on homogeneous trees.  Each
// subcommand runs one experiment, writes CSV metric tables plus report.json
// into the output directory, and exits 0 (pass), 1 (invalid config),
// 2 (verdict fail) or 3 (internal error).

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "treeharm/experiments.hpp"

namespace {

struct CliOptions {
  std::string config_path;
  std::string out_dir;
  std::optional<std::uint64_t> seed;
  bool quiet = false;
};

int run(const std::string& experiment, const CliOptions& opts) {
  using namespace treeharm;
  ExperimentConfig cfg = opts.config_path.empty()
                             ? default_config(experiment)
                             : load_config_file(opts.config_path, experiment);
  if (opts.seed) cfg.seed = *opts.seed;
  if (!opts.out_dir.empty()) cfg.output_path = opts.out_dir;

  const ExperimentReport report = run_experiment(cfg);
  write_report(report, cfg.output_path);

  if (!opts.quiet) {
    for (const auto& c : report.checks) {
      std::cout << (c.informational ? "[info] " : (c.pass ? "[ok]   " : "[FAIL] ")) << c.name
                << " = " << format_g17(c.value) << "  (" << c.criterion << ")\n";
    }
    std::cout << report.experiment << ": " << to_string(report.verdict()) << "  ["
              << format_g17(report.wall_seconds) << " s]  -> " << cfg.output_path << "\n";
  }
  return report.verdict() == Verdict::fail ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Roe-Strichartz phenomena on homogeneous trees, at desk scale"};
  app.require_subcommand(1);

  CliOptions opts;
  std::string chosen;
  for (const std::string& name : treeharm::experiment_names()) {
    CLI::App* sub = app.add_subcommand(name, "run the " + name + " experiment");
    sub->add_option("--config", opts.config_path, "JSON config file (unknown keys rejected)");
    sub->add_option("--out", opts.out_dir, "output directory for CSV tables and report.json");
    sub->add_option("--seed", opts.seed, "override the RNG seed");
    sub->add_flag("--quiet", opts.quiet, "suppress the per-check summary");
    sub->callback([&chosen, name] { chosen = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    return run(chosen, opts);
  } catch (const treeharm::ConfigError& e) {
    std::cerr << "invalid config: " << e.what() << "\n";
    return 1;
  } catch (const treeharm::DegenerateZ& e) {
    std::cerr << "invalid config: " << e.what() << "\n";
    return 1;
  } catch (const treeharm::NoSolution& e) {
    std::cerr << "invalid config: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
