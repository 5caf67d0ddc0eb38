// flsim: run a sonar scenario file.
//
//   flsim null    --scenario s.yaml --out dir
//   flsim sim     --scenario s.yaml --out dir [--seed N] [--rays N] [--pings N] [--no-noise]
//   flsim compare --scenario s.yaml --out dir ...
//   flsim detect  --scenario s.yaml --out dir ... [--gamma G]
//
// Exit codes: 0 success, 1 validation error, 2 comparison failure,
// 3 numerical diagnostic.

#include <CLI11.hpp>

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <string>

#include "flsim/errors.hpp"
#include "flsim/runs.hpp"
#include "flsim/scenario.hpp"

namespace {

enum ExitCode : int { kOk = 0, kValidation = 1, kCompareFailed = 2, kNumerical = 3 };

struct Args {
  std::string scenario;
  std::string out;
  std::uint64_t seed = 0;
  std::uint64_t rays = 0;
  std::uint64_t pings = 0;
  double gamma = 0.0;
  bool no_noise = false;
};

void add_common(CLI::App* cmd, Args& a) {
  cmd->add_option("--scenario", a.scenario, "Scenario YAML file")->required();
  cmd->add_option("--out", a.out, "Output directory (default: run.output_dir)");
  cmd->add_option("--seed", a.seed, "Random seed");
  cmd->add_option("--rays", a.rays, "Rays per ping")->check(CLI::PositiveNumber);
  cmd->add_option("--pings", a.pings, "Number of pings")->check(CLI::PositiveNumber);
  cmd->add_option("--gamma", a.gamma, "Detection threshold");
  cmd->add_flag("--no-noise", a.no_noise, "Disable noise injection");
}

int run(const std::string& command, const CLI::App& sub, const Args& a) {
  flsim::Scenario sc = flsim::load_scenario(a.scenario);
  flsim::RunOverrides o;
  if (sub.count("--seed")) o.seed = a.seed;
  if (sub.count("--rays")) o.rays = a.rays;
  if (sub.count("--pings")) o.pings = a.pings;
  if (sub.count("--gamma")) o.gamma = a.gamma;
  o.no_noise = a.no_noise;
  flsim::apply_overrides(sc, o);

  std::filesystem::path out = a.out.empty() ? sc.run.output_dir : a.out;
  if (out.empty()) throw flsim::ValidationError("--out: no output directory given");

  if (command == "null") {
    flsim::run_null(sc, out);
  } else if (command == "sim") {
    flsim::run_sim(sc, out);
  } else if (command == "compare") {
    const flsim::CompareOutcome r = flsim::run_compare(sc, out);
    std::cout << (r.passed ? "PASS" : "FAIL") << ": " << r.checked - r.failed << "/" << r.checked
              << " bins within " << sc.compare.max_gap_db << " dB\n";
    return r.passed ? kOk : kCompareFailed;
  } else {
    flsim::run_detect(sc, out);
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Forward-looking sonar simulator"};
  app.require_subcommand(1);
  Args args;
  const char* commands[][2] = {
      {"null", "Expected returns from the analytic null model"},
      {"sim", "Simulate pings by ray tracing"},
      {"compare", "Compare simulated mean against the null model"},
      {"detect", "Run likelihood-ratio detection over simulated pings"},
  };
  for (const auto& c : commands) add_common(app.add_subcommand(c[0], c[1]), args);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kValidation;
  }

  const CLI::App* sub = app.get_subcommands().front();
  try {
    return run(sub->get_name(), *sub, args);
  } catch (const flsim::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kValidation;
  } catch (const flsim::NumericalDiagnostic& e) {
    std::cerr << "numerical diagnostic: " << e.what() << "\n";
    return kNumerical;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kValidation;
  }
}
