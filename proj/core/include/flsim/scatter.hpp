#pragma once

// SEARAY backscatter coefficients and the sonar-equation assemblies for
// reverberation and target echo.

#include "flsim/level.hpp"

namespace flsim {

struct ScatterGeometry {
  double grazing_rad = 0.0;        ///< in (0, pi/2]
  double ensonified_area_m2 = 0.0;
  double ensonified_volume_m3 = 0.0;
};

/// Roughness on the bottom-type scale [1, 4] (1 smooth/mud .. 4 rock).
struct ObjectMaterial {
  double rms_roughness = 4.0;

  void validate() const;
  bool operator==(const ObjectMaterial&) const = default;
};

/// Largest grazing angle fed to the surface coefficient.
inline constexpr double kSurfaceGrazingCapRad = 1.5707963267948966 - 1e-6;

/// Bottom backscatter strength S_B (dB/m^2) for bottom type `bt`, grazing
/// angle and frequency. Never below -44.2 dB; finite for any grazing in (0, pi/2].
[[nodiscard]] double bottom_coeff(double bt, double grazing_rad, double f_khz);

/// Surface backscatter strength S_S (dB/m^2). Grazing angles at or above
/// pi/2 are evaluated at `kSurfaceGrazingCapRad`.
[[nodiscard]] double surface_coeff(double wind_knots, double grazing_rad, double f_khz);

/// Exponent of tan(grazing) in the surface coefficient.
[[nodiscard]] double surface_exponent(double wind_knots, double grazing_rad, double f_khz) noexcept;

/// Volume backscatter strength S_V = Sp + 7 log10(f) (dB/m^3).
[[nodiscard]] double volume_coeff(double particle_density_db, double f_khz);

/// RL = SL - TL + BP_T + BP_R + coeff + 10 log10(measure). A zero measure or
/// a no-response beam factor yields no-response.
[[nodiscard]] Level reverb_level(double source_level_db, double transmission_loss_db,
                                 Level bp_transmit, Level bp_receive, double coeff_db,
                                 double measure);

/// I_R = SL - TL + BP_T + BP_R + TS.
[[nodiscard]] Level target_echo_level(double source_level_db, double transmission_loss_db,
                                      Level bp_transmit, Level bp_receive, Level target_strength);

/// Object target strength: the bottom coefficient evaluated with the object
/// roughness in place of the bottom type, plus 10 log10 of the patch area.
[[nodiscard]] Level target_strength(double patch_area_m2, double grazing_rad, double f_khz,
                                    const ObjectMaterial& material);

}  // namespace flsim
