#pragma once

// Scenario-1 parameters built by hand, independent of the YAML loader.

#include "flsim/acoustics.hpp"
#include "flsim/geometry.hpp"
#include "flsim/nullmodel.hpp"

namespace flsim::test {

inline EnvironmentParams scenario1_env() {
  EnvironmentParams e;
  e.temperature_c = 10;
  e.salinity_ppt = 35;
  e.depth_m = 7;
  e.max_depth_m = 12;
  e.ph = 8;
  e.wind_knots = 10;
  e.shipping_density = 0.5;
  e.particle_density_db = -90;
  e.bottom_type = 2;
  return e;
}

inline SonarConfig scenario1_sonar() {
  SonarConfig s;
  s.frequency_khz = 450;
  s.bandwidth_hz = 50000;
  s.source_level_db = 0;
  s.ping_rate_hz = 15;
  const double lambda = s.wavelength_m(sound_speed(scenario1_env()));
  s.horizontal_len_m = 3 * lambda;
  s.vertical_len_m = 2 * lambda;
  s.bin_length_m = 0.25;
  s.num_rays = 20000;
  s.beams = {BeamOrientation{}};
  s.rng_seed = 1;
  return s;
}

inline SonarPose scenario1_pose() { return SonarPose{5.0, 7.0, 0.0}; }

inline BeamPair forward_pair() { return BeamPair{}; }

inline double scenario1_c() { return sound_speed(scenario1_env()); }

}  // namespace flsim::test
