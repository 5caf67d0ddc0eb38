#pragma once

// Monte-Carlo ping simulation. Rays leave the transducer in random
// directions, are traced to the maximum range, and deposit reverberation or
// echo intensity in the distance bin of impact. Volume reverberation is
// credited to every bin a ray passes before it stops. One specular bounce
// is followed per ray.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "flsim/acoustics.hpp"
#include "flsim/geometry.hpp"
#include "flsim/level.hpp"
#include "flsim/scene.hpp"

namespace flsim {

enum class RaySampling {
  /// Uniform over the full sphere.
  kSphere,
  /// Uniform over the transmitter's front hemisphere (rays behind it carry
  /// no transmit gain, so the estimate is unchanged in expectation).
  kHemisphere,
};

struct SimOptions {
  RaySampling sampling = RaySampling::kSphere;
  bool volume = true;
  bool multipath = true;
  bool noise = false;
  /// Worker threads; 0 uses the hardware concurrency. Results do not depend on it.
  unsigned threads = 0;

  bool operator==(const SimOptions&) const = default;
};

/// Rays per random stream. Stream k covers rays [k * kRayChunk, (k + 1) * kRayChunk).
inline constexpr std::size_t kRayChunk = 1024;

/// n unit vectors, each a normalized triple of standard normals. Vectors
/// shorter than 1e-12 before normalization are redrawn. `stream` separates
/// independent sequences under one seed (pings use their index).
[[nodiscard]] std::vector<Vec3> sample_ray_directions(std::uint64_t n, std::uint64_t seed,
                                                      std::uint64_t stream = 0);

/// Surface patch represented by one of n_rays rays that sample `solid_angle_sr`:
/// (solid_angle / n) d^2 / sin(grazing), with sin(grazing) floored at sin(1 deg).
[[nodiscard]] double ray_patch_area(double distance_m, double grazing_rad, std::uint64_t n_rays,
                                    double solid_angle_sr = 4.0 * 3.14159265358979323846);

/// (1 / n_rays) (4/3) pi (d_n^3 - d_{n-1}^3).
[[nodiscard]] double ray_bin_volume(std::size_t n, const BinLayout& layout, std::uint64_t n_rays);

/// Second leg of a first-order bounce: the incident ray reflected about the
/// hit normal and traced for the range left after the first leg.
[[nodiscard]] std::optional<Hit> multipath_bounce(const Scene& scene, const Hit& hit,
                                                  const Ray& incident);

/// Backscatter strength (dB re 1 m^2) for a hit.
[[nodiscard]] double hit_scatter_coeff(const Hit& hit, const EnvironmentParams& env,
                                       double f_khz);

/// Linear per-bin intensities received by one beam.
struct BeamReturn {
  BeamOrientation orientation;  ///< with the platform pitch folded in
  std::vector<double> total;
  std::vector<double> bottom;
  std::vector<double> surface;
  std::vector<double> object;
  std::vector<double> volume;
  std::vector<double> multipath;

  [[nodiscard]] std::vector<Level> total_db() const;
};

struct PingReturn {
  BinLayout layout;
  std::uint64_t rng_seed = 0;
  std::uint64_t ping_index = 0;
  std::uint64_t ray_count = 0;
  std::vector<BeamReturn> beams;
};

/// 10 log10 of each entry, no-response for zero.
[[nodiscard]] std::vector<Level> to_db(const std::vector<double>& linear);

/// One ping: traces sonar.num_rays rays from (0, 0, pose.depth_m) using
/// seed sonar.rng_seed and stream `ping_index`, and evaluates every receive
/// beam in sonar.beams. The transmitter orientation and the receive beams
/// both get the platform pitch added. Throws ValidationError for zero rays.
[[nodiscard]] PingReturn ping(const Scene& scene, const EnvironmentParams& env,
                              const SonarConfig& sonar, const SonarPose& pose,
                              const BeamOrientation& transmitter, std::uint64_t ping_index,
                              const SimOptions& options = {});

/// Adds an exponential noise power of mean 10^(NL_B / 10) to every bin of
/// every beam's total. Deterministic in (seed, ping index).
void add_noise(PingReturn& ping, const SonarConfig& sonar, const EnvironmentParams& env,
               std::uint64_t seed);

}  // namespace flsim
