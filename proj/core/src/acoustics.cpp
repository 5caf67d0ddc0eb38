#include "flsim/acoustics.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "flsim/errors.hpp"

namespace flsim {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw ValidationError(message);
}

void require_in(double value, double lo, double hi, const char* field) {
  require(std::isfinite(value) && value >= lo && value <= hi,
          std::string(field) + " = " + std::to_string(value) + " outside [" +
              std::to_string(lo) + ", " + std::to_string(hi) + "]");
}

void require_positive(double value, const char* field) {
  require(std::isfinite(value) && value > 0.0,
          std::string(field) + " = " + std::to_string(value) + " must be > 0");
}

}  // namespace

void EnvironmentParams::validate() const {
  require_in(temperature_c, 0.0, 35.0, "environment.temperature_c");
  require_in(salinity_ppt, 0.0, 45.0, "environment.salinity_ppt");
  require_in(depth_m, 0.0, 1000.0, "environment.depth_m");
  require(std::isfinite(max_depth_m) && max_depth_m >= 0.0,
          "environment.max_depth_m must be >= 0");
  require(std::isfinite(ph), "environment.ph must be finite");
  require(std::isfinite(wind_knots) && wind_knots >= 0.0, "environment.wind_knots must be >= 0");
  require_in(shipping_density, 0.0, 1.0, "environment.shipping_density");
  require(std::isfinite(particle_density_db), "environment.particle_density_db must be finite");
  require_in(bottom_type, 1.0, 4.0, "environment.bottom_type");
}

double wrap_angle(double rad) noexcept {
  constexpr double kTwoPi = 2.0 * std::numbers::pi;
  double w = std::remainder(rad, kTwoPi);  // [-pi, pi]
  if (w <= -std::numbers::pi) w += kTwoPi;
  return w;
}

BeamOrientation BeamOrientation::normalized() const {
  require(std::isfinite(pitch_rad) && std::isfinite(yaw_rad), "beam angles must be finite");
  return {wrap_angle(pitch_rad), wrap_angle(yaw_rad)};
}

void SonarConfig::validate() const {
  require_positive(frequency_khz, "sonar.frequency_khz");
  require_positive(bandwidth_hz, "sonar.bandwidth_hz");
  require(std::isfinite(source_level_db), "sonar.source_level_db must be finite");
  require_positive(ping_rate_hz, "sonar.ping_rate_hz");
  require_positive(horizontal_len_m, "sonar.horizontal_len_m");
  require_positive(vertical_len_m, "sonar.vertical_len_m");
  require_positive(bin_length_m, "sonar.bin_length_m");
  require(num_rays >= 1, "sonar.num_rays must be >= 1");
  require(!beams.empty(), "sonar.beams must not be empty");
  for (const auto& b : beams) (void)b.normalized();
}

double sound_speed(const EnvironmentParams& env) {
  require_in(env.temperature_c, 0.0, 35.0, "environment.temperature_c");
  require_in(env.salinity_ppt, 0.0, 45.0, "environment.salinity_ppt");
  require_in(env.depth_m, 0.0, 1000.0, "environment.depth_m");
  const double t = env.temperature_c;
  return 1449.2 + 4.6 * t - 0.055 * t * t + 0.00029 * t * t * t +
         (1.34 - 0.010 * t) * (env.salinity_ppt - 35.0) + 0.016 * env.depth_m;
}

double absorption_coeff(double f_khz, const EnvironmentParams& env) {
  return absorption_coeff(f_khz, env, sound_speed(env));
}

double absorption_coeff(double f_khz, const EnvironmentParams& env, double c) {
  require_positive(f_khz, "frequency_khz");
  const double t = env.temperature_c;
  const double s = env.salinity_ppt;
  const double zmax = env.max_depth_m;
  const double f2 = f_khz * f_khz;
  const double kelvin = t + 273.0;

  // Boric acid.
  const double a1 = 8.696 / c * std::pow(10.0, 0.78 * env.ph - 5.0);
  const double fr1 = 2.8 * std::sqrt(s / 35.0) * std::pow(10.0, 4.0 - 1245.0 / kelvin);
  const double p1 = 1.0;

  // Magnesium sulphate.
  const double a2 = 21.44 * s / c * (1.0 + 0.025 * t);
  const double fr2 = 8.17 * std::pow(10.0, 8.0 - 1990.0 / kelvin) / (1.0 + 0.0018 * (s - 35.0));
  const double p2 = 1.0 - 1.37e-4 * zmax + 6.2e-9 * zmax * zmax;

  // Pure water.
  const double a3 = t <= 20.0
                        ? 4.937e-4 - 2.59e-5 * t + 9.11e-7 * t * t - 1.5e-8 * t * t * t
                        : 3.964e-4 - 1.146e-5 * t + 1.45e-7 * t * t - 6.5e-10 * t * t * t;
  const double p3 = 1.0 - 3.83e-5 * zmax + 4.9e-10 * zmax * zmax;

  return a1 * p1 * fr1 * f2 / (fr1 * fr1 + f2) + a2 * p2 * fr2 * f2 / (fr2 * fr2 + f2) +
         a3 * p3 * f2;
}

double attenuation_total(double alpha_db_per_km, double d_m) noexcept {
  const double d = d_m < 1.0 ? 1.0 : d_m;
  return (2.0 * d - 1.0) * alpha_db_per_km / 1000.0;
}

double spread_loss(double d_m) {
  require(d_m > 0.0, "distance must be > 0 for spreading loss");
  return d_m <= 1.0 ? 0.0 : 40.0 * std::log10(d_m);
}

double transmission_loss(double d_m, double alpha_db_per_km) {
  return spread_loss(d_m) + attenuation_total(alpha_db_per_km, d_m);
}

double sinc(double x) noexcept {
  if (x == 0.0) return 1.0;
  // Nulls land on integers; snap rounding residue there to an exact zero.
  const double k = std::round(x);
  if (k != 0.0 && std::abs(x - k) <= 1e-12 * std::abs(k)) return 0.0;
  const double px = std::numbers::pi * x;
  return std::sin(px) / px;
}

Level beam_pattern_loss(double theta, double psi, const SonarConfig& sonar, double c) {
  constexpr double kHalfPi = std::numbers::pi / 2.0;
  if (!(std::abs(theta) < kHalfPi) || !(std::abs(psi) < kHalfPi)) return Level::none();
  const double lambda = sonar.wavelength_m(c);
  const double alpha = sinc(std::sin(theta) * std::cos(psi) * sonar.horizontal_len_m / lambda);
  const double beta = sinc(std::sin(psi) * sonar.vertical_len_m / lambda);
  const double ab = std::abs(alpha * beta);
  if (ab == 0.0) return Level::none();
  return Level::db(20.0 * std::log10(ab));
}

double aperture_gain(const Vec3& v, double horizontal_len_wl, double vertical_len_wl) noexcept {
  if (!(v.x > 0.0)) return 0.0;
  const double inv = 1.0 / v.norm();
  // sin(theta)cos(psi) = v_y/|v| and sin(psi) = v_z/|v| for the surface-convention angles.
  const double ab = sinc(v.y * inv * horizontal_len_wl) * sinc(v.z * inv * vertical_len_wl);
  return ab * ab;
}

double range_resolution(double c, double bandwidth_hz) {
  require_positive(bandwidth_hz, "bandwidth_hz");
  return c / (2.0 * bandwidth_hz);
}

double max_range(double c, double ping_rate_hz) {
  require_positive(ping_rate_hz, "ping_rate_hz");
  return c / (2.0 * ping_rate_hz);
}

NoiseComponents noise_components(double f_khz, const EnvironmentParams& env) {
  require_positive(f_khz, "frequency_khz");
  const double lf = std::log10(f_khz);
  return {
      17.0 - 30.0 * lf,
      40.0 + 20.0 * (env.shipping_density - 0.5) + 26.0 * lf - 60.0 * std::log10(f_khz + 0.03),
      50.0 + 5.38 * std::sqrt(env.wind_knots) + 20.0 * lf - 40.0 * std::log10(f_khz + 0.4),
      -15.0 + 20.0 * lf,
  };
}

double noise_level(double f_khz, const EnvironmentParams& env) {
  const NoiseComponents n = noise_components(f_khz, env);
  return power_sum({Level::db(n.turbulence_db), Level::db(n.traffic_db), Level::db(n.sea_state_db),
                    Level::db(n.thermal_db)})
      .value_db();
}

double noise_level_band(double f_khz, const EnvironmentParams& env, double bandwidth_hz) {
  require_positive(bandwidth_hz, "bandwidth_hz");
  return noise_level(f_khz, env) + 10.0 * std::log10(bandwidth_hz);
}

}  // namespace flsim
