#pragma once

// Ensonified geometry for the analytic null model: bins, bottom/surface
// rings, spherical shells cut by the bottom and surface planes, frame
// rotations and beam-angle extraction.
//
// Bins are 1-based: bin n covers [d_{n-1}, d_n) with d_0 = 0.

#include <cstddef>

#include "flsim/acoustics.hpp"
#include "flsim/vec3.hpp"

namespace flsim {

class BinLayout {
 public:
  BinLayout() = default;
  BinLayout(double bin_length_m, std::size_t num_bins);

  /// Smallest layout of `bin_length_m` bins whose last edge reaches `d_max`.
  [[nodiscard]] static BinLayout for_range(double d_max_m, double bin_length_m);

  [[nodiscard]] double bin_length() const noexcept { return bin_length_; }
  [[nodiscard]] std::size_t num_bins() const noexcept { return num_bins_; }
  /// d_n; edge(0) = 0.
  [[nodiscard]] double edge(std::size_t n) const noexcept {
    return static_cast<double>(n) * bin_length_;
  }
  /// Bin holding distance d, or 0 when d is negative or past the last edge.
  [[nodiscard]] std::size_t bin_index(double d_m) const noexcept;

  bool operator==(const BinLayout&) const = default;

 private:
  double bin_length_ = 1.0;
  std::size_t num_bins_ = 0;
};

struct SonarPose {
  double altitude_m = 5.0;  ///< h, above a locally flat bottom
  double depth_m = 7.0;     ///< h_d, below the surface
  double pitch_rad = 0.0;   ///< platform pitch, added to every beam pitch

  void validate() const;
  bool operator==(const SonarPose&) const = default;
};

/// Beam orientation with the platform pitch folded in.
[[nodiscard]] BeamOrientation effective_orientation(const BeamOrientation& beam,
                                                    const SonarPose& pose);

/// sqrt(d^2 - h^2) when h < d, else 0.
[[nodiscard]] double ring_radius(double d_m, double h_m) noexcept;

/// Ensonified annulus of bin n on a plane at distance h:
/// pi r_n^2 minus the area already claimed by bins 1..n-1.
[[nodiscard]] double ring_area(std::size_t n, const BinLayout& layout, double h_m) noexcept;

/// Grazing angle at the ring centre: asin(clamp(2|h| / (d_n + d_{n-1}), 0, 1))
/// when h < d_n, else 0.
[[nodiscard]] double ring_grazing(double d_outer, double d_inner, double h_m) noexcept;
[[nodiscard]] double ring_grazing(std::size_t n, const BinLayout& layout, double h_m) noexcept;

/// Pitch rotation [cos 0 sin; 0 1 0; -sin 0 cos] applied to v.
[[nodiscard]] Vec3 rotate_to_sonar_frame(const Vec3& v, double pitch_rad) noexcept;

/// World direction into the frame of a beam: yaw about z, then the pitch
/// rotation. The beam's boresight maps to [1, 0, 0].
[[nodiscard]] Vec3 to_beam_frame(const Vec3& world, const BeamOrientation& beam) noexcept;

struct BeamAngles {
  double theta_rad;  ///< horizontal
  double psi_rad;    ///< vertical, positive downward
};

/// theta = atan(v_y / v_x), psi = atan(v_z / sqrt(v_x^2 + v_y^2)); quadrant-aware.
[[nodiscard]] BeamAngles beam_angles_surface(const Vec3& v) noexcept;

/// theta = atan(v_y / v_x), psi = atan(v_z / v_x); quadrant-aware.
[[nodiscard]] BeamAngles beam_angles_volume(const Vec3& v) noexcept;

/// Volume of the shell between d_{n-1} and d_n that lies between the bottom
/// plane (h below) and the surface plane (h_d above). The parts beyond each
/// plane are removed as exact spherical caps.
[[nodiscard]] double shell_volume(std::size_t n, const BinLayout& layout, double h_m,
                                  double h_d_m) noexcept;
[[nodiscard]] double shell_volume(double d_outer, double d_inner, double h_m,
                                  double h_d_m) noexcept;

/// Shell volume with the cut-offs approximated as hemispheres of radius
/// sqrt(d^2 - h^2), i.e. (2/3) pi (d^2 - h^2)^{3/2} per sphere.
[[nodiscard]] double shell_volume_hemispherical(std::size_t n, const BinLayout& layout,
                                                double h_m, double h_d_m) noexcept;

struct CutoffAngles {
  double bottom_rad;   ///< theta_ha: depression beyond which rays reach the bottom
  double surface_rad;  ///< theta_hd: elevation beyond which rays reach the surface
};

/// asin(2h / (d_n + d_{n-1})) when h lies short of the bin mid-distance, else 0;
/// likewise for h_d. Arguments above 1 clamp to pi/2.
[[nodiscard]] CutoffAngles cutoff_angles(double d_outer, double d_inner, double h_m,
                                         double h_d_m) noexcept;
[[nodiscard]] CutoffAngles cutoff_angles(std::size_t n, const BinLayout& layout, double h_m,
                                         double h_d_m) noexcept;

/// World-elevation band through which sound reaches a given distance without
/// meeting the bottom or surface. A boundary out of reach does not cut (pi/2).
struct VolumeGate {
  double max_depression_rad;  ///< toward the bottom
  double max_elevation_rad;   ///< toward the surface
};

[[nodiscard]] VolumeGate volume_gate(double d_outer, double d_inner, double h_m,
                                     double h_d_m) noexcept;

/// d_n - d_b / 2.
[[nodiscard]] double bin_center(std::size_t n, const BinLayout& layout) noexcept;

}  // namespace flsim
