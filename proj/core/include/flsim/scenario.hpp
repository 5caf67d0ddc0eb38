#pragma once

// Scenario files: a YAML document describing the environment, the sonar,
// its pose, the scene and the run controls. Unknown keys are errors.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "flsim/acoustics.hpp"
#include "flsim/geometry.hpp"
#include "flsim/nullmodel.hpp"
#include "flsim/raysim.hpp"
#include "flsim/scene.hpp"

namespace flsim {

struct RunControls {
  std::uint64_t num_pings = 1;
  bool noise = false;
  std::string output_dir;

  bool operator==(const RunControls&) const = default;
};

/// Gap criteria for `compare`: every bin whose centre lies in
/// [window_min_m, window_max_m] and whose expected level is at least
/// floor_db must match the simulated mean within max_gap_db.
struct CompareCriteria {
  double window_min_m = 0.0;
  double window_max_m = 20.0;
  double max_gap_db = 3.0;
  double floor_db = -120.0;

  bool operator==(const CompareCriteria&) const = default;
};

struct DetectSettings {
  double gamma = 10.0;
  double sigma_db = 3.0;
  double alt_offset_db = 10.0;

  bool operator==(const DetectSettings&) const = default;
};

struct Scenario {
  EnvironmentParams env;
  SonarConfig sonar;  ///< sonar.rng_seed is the run seed
  SonarPose pose;
  BeamOrientation transmitter;
  Scene scene;
  RunControls run;
  SimOptions sim;  ///< sim.noise mirrors run.noise
  NullModelOptions null_model;
  CompareCriteria compare;
  DetectSettings detect;

  /// Checks every nested invariant plus consistency between the pose and
  /// the bottom: the bottom below the sonar must lie at pose.depth + altitude.
  void validate() const;
  bool operator==(const Scenario&) const = default;
};

/// Throws ValidationError with a dotted field path on any schema or bound violation.
[[nodiscard]] Scenario parse_scenario(const std::string& yaml_text);
[[nodiscard]] Scenario load_scenario(const std::filesystem::path& path);

/// Canonical YAML (radians, metres, 17 significant digits); parses back to an equal Scenario.
[[nodiscard]] std::string serialize_scenario(const Scenario& scenario);

struct RunOverrides {
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> rays;
  std::optional<std::uint64_t> pings;
  std::optional<double> gamma;
  bool no_noise = false;
};

/// Applies command-line overrides and re-validates.
void apply_overrides(Scenario& scenario, const RunOverrides& overrides);

}  // namespace flsim
