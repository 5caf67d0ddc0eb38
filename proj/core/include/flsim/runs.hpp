#pragma once

// Run orchestration and table export for scenarios.
//
// Tables are comma-separated with a header row; dB values print with six
// decimals and the token `null` stands for no response. Every run also
// writes run.yaml holding the command and the fully resolved scenario.

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "flsim/detect.hpp"
#include "flsim/nullmodel.hpp"
#include "flsim/raysim.hpp"
#include "flsim/scenario.hpp"

namespace flsim {

/// Transmitter/receiver pair per receive beam, platform pitch folded in.
[[nodiscard]] std::vector<BeamPair> beam_pairs(const Scenario& scenario);

/// Expected null per receive beam.
[[nodiscard]] std::vector<NullModelReturn> compute_nulls(const Scenario& scenario);

/// run.num_pings pings (index 0, 1, ...).
[[nodiscard]] std::vector<PingReturn> simulate(const Scenario& scenario);

/// Per-beam mean linear total over pings.
[[nodiscard]] std::vector<std::vector<double>> mean_total(const std::vector<PingReturn>& pings);

struct CompareRow {
  std::size_t beam = 0;
  std::size_t bin = 0;
  double center_m = 0.0;
  Level expected;
  Level simulated;
  std::optional<double> gap_db;  ///< simulated - expected, when both exist
  bool in_window = false;
  bool passed = true;
};

struct CompareOutcome {
  bool passed = true;
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::vector<CompareRow> rows;
};

[[nodiscard]] CompareOutcome compare_tables(const std::vector<NullModelReturn>& nulls,
                                            const std::vector<std::vector<double>>& sim_mean,
                                            const CompareCriteria& criteria);

/// Writes null_beam<k>.csv.
void run_null(const Scenario& scenario, const std::filesystem::path& out_dir);
/// Writes ping_<NNNN>.csv per ping and sim_mean.csv.
void run_sim(const Scenario& scenario, const std::filesystem::path& out_dir);
/// Writes compare.csv and sim_mean.csv; the outcome's `passed` drives the exit code.
CompareOutcome run_compare(const Scenario& scenario, const std::filesystem::path& out_dir);
/// Writes detect_ping_<NNNN>.csv per ping and detect_summary.csv.
void run_detect(const Scenario& scenario, const std::filesystem::path& out_dir);

/// "null" for no response, else the value with six decimals.
[[nodiscard]] std::string format_db(Level level);

}  // namespace flsim
