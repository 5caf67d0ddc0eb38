#include "flsim/scatter.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "flsim/errors.hpp"

namespace flsim {

void ObjectMaterial::validate() const {
  if (!(rms_roughness >= 1.0 && rms_roughness <= 4.0)) {
    throw ValidationError("material.rms_roughness = " + std::to_string(rms_roughness) +
                          " outside [1, 4]");
  }
}

double bottom_coeff(double bt, double grazing, double f_khz) {
  if (!(grazing > 0.0 && grazing <= 1.5707963267948966 + 1e-12)) {
    throw ValidationError("bottom grazing angle must lie in (0, pi/2]");
  }
  if (!(bt >= 1.0 && bt <= 4.0)) throw ValidationError("bottom_type outside [1, 4]");
  if (!(f_khz > 0.0)) throw ValidationError("frequency_khz must be > 0");

  const double sin_g = std::sin(grazing);
  const double cos_g = std::cos(grazing);
  // cot^2 = cos^2/sin^2 grows without bound as grazing -> 0; exp() then
  // underflows to exactly 0 and gamma -> 1.
  const double cot2 = (cos_g * cos_g) / (sin_g * sin_g);
  const double shape = bt - 1.75;
  const double gamma = 1.0 + 125.0 * std::exp(-2.64 * shape * shape - (50.0 / bt) * cot2);
  const double beta = gamma * std::pow(sin_g + 0.19, bt * std::pow(cos_g, 16));
  const double linear =
      3.03 * beta * std::pow(f_khz, 3.2 - 0.8 * bt) * std::pow(10.0, 2.8 * bt - 12.0) +
      std::pow(10.0, -4.42);
  return 10.0 * std::log10(linear);
}

double surface_exponent(double wind, double grazing, double f_khz) noexcept {
  const double g = std::min(grazing, kSurfaceGrazingCapRad);
  return 4.0 * ((wind + 2.0) / (wind + 1.0)) +
         (2.5 * std::pow(f_khz + 0.1, -1.0 / 3.0) - 4.0) * std::pow(std::cos(g), 1.0 / 8.0);
}

double surface_coeff(double wind, double grazing, double f_khz) {
  if (!(grazing > 0.0)) throw ValidationError("surface grazing angle must be > 0");
  if (!(wind >= 0.0)) throw ValidationError("wind_knots must be >= 0");
  if (!(f_khz > 0.0)) throw ValidationError("frequency_khz must be > 0");
  const double g = std::min(grazing, kSurfaceGrazingCapRad);
  const double beta = surface_exponent(wind, g, f_khz);
  // Evaluated as a sum of logs so tan^beta cannot overflow near the cap.
  return 10.0 * (-5.05 + 2.0 * std::log10(1.0 + wind) +
                 (wind / 150.0) * std::log10(f_khz + 0.1) + beta * std::log10(std::tan(g)));
}

double volume_coeff(double particle_density_db, double f_khz) {
  if (!(f_khz > 0.0)) throw ValidationError("frequency_khz must be > 0");
  return particle_density_db + 7.0 * std::log10(f_khz);
}

Level reverb_level(double sl, double tl, Level bp_t, Level bp_r, double coeff, double measure) {
  if (!(measure > 0.0)) return Level::none();
  return Level::db(sl - tl + coeff + 10.0 * std::log10(measure)) + bp_t + bp_r;
}

Level target_echo_level(double sl, double tl, Level bp_t, Level bp_r, Level ts) {
  return Level::db(sl - tl) + bp_t + bp_r + ts;
}

Level target_strength(double patch_area_m2, double grazing, double f_khz,
                      const ObjectMaterial& material) {
  if (!(patch_area_m2 > 0.0)) return Level::none();
  return Level::db(bottom_coeff(material.rms_roughness, grazing, f_khz) +
                   10.0 * std::log10(patch_area_m2));
}

}  // namespace flsim
