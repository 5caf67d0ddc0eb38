#pragma once

// Closed-form propagation physics for a forward-looking sonar: sound speed,
// seawater absorption, spreading, transmission loss, the rectangular-aperture
// beam pattern, range resolution, maximum range and ambient noise.
//
// Units are part of every signature. Frequencies appear in kHz for the
// empirical formulas; the wavelength is always formed with the frequency in Hz.

#include <cstdint>
#include <vector>

#include "flsim/level.hpp"
#include "flsim/vec3.hpp"

namespace flsim {

struct EnvironmentParams {
  double temperature_c = 10.0;
  double salinity_ppt = 35.0;
  double depth_m = 0.0;       ///< water depth z used by the sound-speed polynomial
  double max_depth_m = 100.0; ///< z_max used by the absorption pressure terms
  double ph = 8.0;
  double wind_knots = 0.0;
  double shipping_density = 0.5;  ///< 0 very light .. 1 heavy
  double particle_density_db = -90.0;
  double bottom_type = 2.0;  ///< 1 mud, 2 sand, 3 gravel, 4 rock

  /// Throws ValidationError naming the first violated bound.
  void validate() const;

  bool operator==(const EnvironmentParams&) const = default;
};

/// Pitch is positive downward. Yaw is positive toward starboard.
struct BeamOrientation {
  double pitch_rad = 0.0;
  double yaw_rad = 0.0;

  /// Both angles wrapped into (-pi, pi]. Throws on non-finite input.
  [[nodiscard]] BeamOrientation normalized() const;

  bool operator==(const BeamOrientation&) const = default;
};

/// Wraps an angle into (-pi, pi].
[[nodiscard]] double wrap_angle(double rad) noexcept;

struct SonarConfig {
  double frequency_khz = 450.0;
  double bandwidth_hz = 50'000.0;
  double source_level_db = 0.0;
  double ping_rate_hz = 15.0;
  double horizontal_len_m = 0.01;
  double vertical_len_m = 0.01;
  double bin_length_m = 0.25;
  std::vector<BeamOrientation> beams{BeamOrientation{}};
  std::uint64_t num_rays = 20'000;
  std::uint64_t rng_seed = 1;

  void validate() const;

  [[nodiscard]] double frequency_hz() const noexcept { return frequency_khz * 1000.0; }
  [[nodiscard]] double wavelength_m(double sound_speed_mps) const noexcept {
    return sound_speed_mps / frequency_hz();
  }

  bool operator==(const SonarConfig&) const = default;
};

/// Medwin's sound-speed approximation (m/s). Valid for 0..35 degC,
/// 0..45 ppt and 0..1000 m; outside that range throws ValidationError.
[[nodiscard]] double sound_speed(const EnvironmentParams& env);

/// Francois-Garrison absorption (dB/km): boric acid, magnesium sulphate
/// and pure-water terms. The sound speed is taken from `sound_speed(env)`.
[[nodiscard]] double absorption_coeff(double f_khz, const EnvironmentParams& env);
[[nodiscard]] double absorption_coeff(double f_khz, const EnvironmentParams& env,
                                      double sound_speed_mps);

/// Two-way absorption loss (2d - 1)·alpha_w / 1000 in dB. Distances below
/// 1 m are clamped to 1 m.
[[nodiscard]] double attenuation_total(double alpha_db_per_km, double d_m) noexcept;

/// Two-way spherical spreading 40·log10(d) in dB, referenced to 1 m.
/// d in (0, 1) clamps to 0 dB; d <= 0 throws.
[[nodiscard]] double spread_loss(double d_m);

[[nodiscard]] double transmission_loss(double d_m, double alpha_db_per_km);

/// Normalized sinc: sin(pi x) / (pi x), sinc(0) = 1, exactly 0 at nonzero integers.
[[nodiscard]] double sinc(double x) noexcept;

/// One-way beam pattern 20·log10(alpha·beta) for horizontal angle theta and
/// vertical angle psi. Outside the open front hemisphere, or on a sinc null,
/// the result is no-response.
[[nodiscard]] Level beam_pattern_loss(double theta_rad, double psi_rad, const SonarConfig& sonar,
                                      double sound_speed_mps);

/// Linear one-way intensity gain (alpha·beta)^2 for a direction expressed in
/// the transducer frame ([1,0,0] is boresight). Zero outside the front
/// hemisphere. Equivalent to `beam_pattern_loss` with the surface-convention
/// angles of `v`.
[[nodiscard]] double aperture_gain(const Vec3& v_beam, double horizontal_len_wl,
                                   double vertical_len_wl) noexcept;

/// c / (2B) in metres.
[[nodiscard]] double range_resolution(double sound_speed_mps, double bandwidth_hz);

/// c / (2 f_p) in metres.
[[nodiscard]] double max_range(double sound_speed_mps, double ping_rate_hz);

struct NoiseComponents {
  double turbulence_db;
  double traffic_db;
  double sea_state_db;
  double thermal_db;
};

/// Individual empirical noise spectrum levels (dB re 1 Hz) at f_khz.
[[nodiscard]] NoiseComponents noise_components(double f_khz, const EnvironmentParams& env);

/// Power sum of the four noise components, 1 Hz band.
[[nodiscard]] double noise_level(double f_khz, const EnvironmentParams& env);

/// Noise level over a band of `bandwidth_hz`.
[[nodiscard]] double noise_level_band(double f_khz, const EnvironmentParams& env,
                                      double bandwidth_hz);

}  // namespace flsim
