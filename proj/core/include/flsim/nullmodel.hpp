#pragma once

// Analytic expected return per distance bin when no obstacle is present:
// the power sum of bottom, surface and volume reverberation, each built
// from resolution cells and beam-pattern averages over the ensonified
// ring or sphere.

#include <cstddef>
#include <memory>
#include <vector>

#include "flsim/acoustics.hpp"
#include "flsim/geometry.hpp"
#include "flsim/level.hpp"

namespace flsim {

/// How transmit and receive beam-pattern losses are averaged.
enum class BeamAveraging {
  /// Linear intensity, two-way (transmit x receive) product averaged jointly,
  /// normalized by the true measure: 2 pi around a ring, 4 pi sr over the
  /// sphere. This is the expectation of the ray estimator.
  kLinear,
  /// dB-domain average of each pattern with 0 dB outside the gate and the
  /// 1/pi (ring) and 1/pi^2 (angle square) prefactors, summed as BP_T + BP_R.
  kPrintedDb,
};

struct NullModelOptions {
  BeamAveraging averaging = BeamAveraging::kLinear;
  bool bottom = true;
  bool surface = true;
  bool volume = true;
  double quadrature_tol_db = 0.01;
  std::size_t max_panels = std::size_t{1} << 18;

  bool operator==(const NullModelOptions&) const = default;
};

struct BeamPair {
  BeamOrientation transmit;
  BeamOrientation receive;

  bool operator==(const BeamPair&) const = default;
};

/// Average two-way beam-pattern factor around a ring of radius `ring_radius`
/// lying in the horizontal plane `plane_z` metres below (negative: above) the
/// sonar. No-response when no point of the ring is inside both gates.
[[nodiscard]] Level avg_ring_bp_loss(double ring_radius, double plane_z, const BeamPair& beams,
                                     const SonarConfig& sonar, double c,
                                     const NullModelOptions& options = {});

/// Bottom ring of bin n, at the midpoint radius (r_n + r_{n-1}) / 2.
[[nodiscard]] Level avg_ring_bp_loss(std::size_t n, const BinLayout& layout, const SonarPose& pose,
                                     const BeamPair& beams, const SonarConfig& sonar, double c,
                                     const NullModelOptions& options = {});

/// Average two-way beam-pattern factor over the sphere of directions,
/// restricted to the elevation band of `gate`.
[[nodiscard]] Level avg_sphere_bp_loss(const VolumeGate& gate, const BeamPair& beams,
                                       const SonarConfig& sonar, double c,
                                       const NullModelOptions& options = {});

/// Same, with the gate taken from bin n's cut-off angles.
[[nodiscard]] Level avg_sphere_bp_loss(std::size_t n, const BinLayout& layout,
                                       const SonarPose& pose, const BeamPair& beams,
                                       const SonarConfig& sonar, double c,
                                       const NullModelOptions& options = {});

/// Precomputed elevation profile of the sphere average for one beam pair, so
/// many elevation bands can be evaluated cheaply. Agrees with
/// `avg_sphere_bp_loss` to well under 0.05 dB.
class SphereProfile {
 public:
  SphereProfile(const BeamPair& beams, const SonarConfig& sonar, double c,
                const NullModelOptions& options = {});
  ~SphereProfile();
  SphereProfile(SphereProfile&&) noexcept;
  SphereProfile& operator=(SphereProfile&&) noexcept;

  [[nodiscard]] Level average(const VolumeGate& gate) const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

struct NullBin {
  std::size_t bin = 0;
  double center_m = 0.0;
  Level total;
  Level bottom;
  Level surface;
  Level volume;
};

struct NullModelReturn {
  BinLayout layout;
  SonarPose pose;
  BeamPair beams;
  std::vector<NullBin> bins;
};

/// Number of resolution cells per bin: floor(d_b / delta_y), at least 1.
/// Cells split the bin evenly.
[[nodiscard]] std::size_t cells_per_bin(double bin_length_m, double resolution_m) noexcept;

[[nodiscard]] std::vector<Level> bottom_return_bins(const EnvironmentParams& env,
                                                    const SonarConfig& sonar,
                                                    const SonarPose& pose, const BeamPair& beams,
                                                    const BinLayout& layout,
                                                    const NullModelOptions& options = {});

[[nodiscard]] std::vector<Level> surface_return_bins(const EnvironmentParams& env,
                                                     const SonarConfig& sonar,
                                                     const SonarPose& pose, const BeamPair& beams,
                                                     const BinLayout& layout,
                                                     const NullModelOptions& options = {});

[[nodiscard]] std::vector<Level> volume_return_bins(const EnvironmentParams& env,
                                                    const SonarConfig& sonar,
                                                    const SonarPose& pose, const BeamPair& beams,
                                                    const BinLayout& layout,
                                                    const NullModelOptions& options = {});

[[nodiscard]] NullModelReturn expected_null(const EnvironmentParams& env,
                                            const SonarConfig& sonar, const SonarPose& pose,
                                            const BeamPair& beams, const BinLayout& layout,
                                            const NullModelOptions& options = {});

/// Bins reaching the maximum range set by the ping rate.
[[nodiscard]] BinLayout layout_for(const EnvironmentParams& env, const SonarConfig& sonar);

}  // namespace flsim
