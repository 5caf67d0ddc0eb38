#include "flsim/raysim.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <random>
#include <thread>

#include "flsim/errors.hpp"
#include "flsim/nullmodel.hpp"
#include "flsim/scatter.hpp"

namespace flsim {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kBounceOffset = 1e-9;
constexpr std::uint32_t kNoiseTag = 0x6e6f6973;  // separates the noise stream from ray streams

std::mt19937_64 make_engine(std::uint64_t seed, std::uint64_t stream, std::uint64_t chunk,
                            std::uint32_t tag = 0) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32),
                    static_cast<std::uint32_t>(chunk), static_cast<std::uint32_t>(chunk >> 32),
                    tag};
  return std::mt19937_64(seq);
}

Vec3 draw_direction(std::mt19937_64& rng, std::normal_distribution<double>& normal) {
  while (true) {
    const Vec3 v{normal(rng), normal(rng), normal(rng)};
    const double len = v.norm();
    if (len >= 1e-12) return v / len;
  }
}

Vec3 boresight(const BeamOrientation& b) {
  const double cp = std::cos(b.pitch_rad);
  return {cp * std::cos(b.yaw_rad), cp * std::sin(b.yaw_rad), std::sin(b.pitch_rad)};
}

template <class F>
void parallel_for(std::size_t count, unsigned threads, F&& body) {
  unsigned workers = threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : threads;
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, count));
  if (workers <= 1) {
    for (std::size_t k = 0; k < count; ++k) body(k);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t k = next++; k < count; k = next++) body(k);
    });
  }
}

// Tallies for one chunk of rays.
struct Partial {
  std::vector<BeamReturn> beams;
  // cover[b][k]: summed two-way gain of rays whose path covers bins 1..k.
  std::vector<std::vector<double>> cover;
};

}  // namespace

std::vector<Vec3> sample_ray_directions(std::uint64_t n, std::uint64_t seed, std::uint64_t stream) {
  std::vector<Vec3> out(n);
  const std::size_t chunks = (n + kRayChunk - 1) / kRayChunk;
  for (std::size_t c = 0; c < chunks; ++c) {
    auto rng = make_engine(seed, stream, c);
    std::normal_distribution<double> normal;
    const std::size_t end = std::min<std::size_t>(n, (c + 1) * kRayChunk);
    for (std::size_t i = c * kRayChunk; i < end; ++i) out[i] = draw_direction(rng, normal);
  }
  return out;
}

double ray_patch_area(double distance, double grazing, std::uint64_t n_rays, double solid_angle) {
  const double s = std::max(std::sin(grazing), std::sin(kPi / 180.0));
  return solid_angle / static_cast<double>(n_rays) * distance * distance / s;
}

double ray_bin_volume(std::size_t n, const BinLayout& layout, std::uint64_t n_rays) {
  const double a = layout.edge(n - 1);
  const double b = layout.edge(n);
  return 4.0 / 3.0 * kPi * (b * b * b - a * a * a) / static_cast<double>(n_rays);
}

std::optional<Hit> multipath_bounce(const Scene& scene, const Hit& hit, const Ray& incident) {
  const double remaining = incident.remaining_range_m - hit.distance_m;
  if (!(remaining > 0.0)) return std::nullopt;
  const Ray second{hit.point + hit.normal * kBounceOffset, reflect(incident.direction, hit.normal),
                   remaining};
  return trace_ray(scene, second);
}

double hit_scatter_coeff(const Hit& hit, const EnvironmentParams& env, double f_khz) {
  switch (hit.kind) {
    case HitKind::kSurface:
      return surface_coeff(env.wind_knots, hit.grazing_rad, f_khz);
    case HitKind::kObject:
      return bottom_coeff(hit.material.rms_roughness, hit.grazing_rad, f_khz);
    case HitKind::kBottom:
      break;
  }
  return bottom_coeff(env.bottom_type, hit.grazing_rad, f_khz);
}

std::vector<Level> BeamReturn::total_db() const { return to_db(total); }

std::vector<Level> to_db(const std::vector<double>& linear) {
  std::vector<Level> out;
  out.reserve(linear.size());
  for (double p : linear) out.push_back(Level::from_linear(p));
  return out;
}

PingReturn ping(const Scene& scene, const EnvironmentParams& env, const SonarConfig& sonar,
                const SonarPose& pose, const BeamOrientation& transmitter,
                std::uint64_t ping_index, const SimOptions& options) {
  env.validate();
  sonar.validate();
  pose.validate();
  scene.validate();
  if (sonar.num_rays == 0) throw ValidationError("sonar.num_rays must be >= 1");

  const double c = sound_speed(env);
  const double alpha = absorption_coeff(sonar.frequency_khz, env, c);
  const double f = sonar.frequency_khz;
  const double d_max = max_range(c, sonar.ping_rate_hz);
  const BinLayout layout = layout_for(env, sonar);
  const std::size_t n_bins = layout.num_bins();
  const double lambda = sonar.wavelength_m(c);
  const double hl = sonar.horizontal_len_m / lambda;
  const double vl = sonar.vertical_len_m / lambda;
  const std::uint64_t n_rays = sonar.num_rays;
  const bool hemisphere = options.sampling == RaySampling::kHemisphere;
  const double solid_angle = hemisphere ? 2.0 * kPi : 4.0 * kPi;

  const BeamOrientation tx = effective_orientation(transmitter, pose);
  const Vec3 tx_axis = boresight(tx);
  std::vector<BeamOrientation> rx;
  rx.reserve(sonar.beams.size());
  for (const auto& b : sonar.beams) rx.push_back(effective_orientation(b, pose));
  const std::size_t n_beams = rx.size();
  const Vec3 origin{0.0, 0.0, pose.depth_m};

  const auto empty_beam = [&](const BeamOrientation& o) {
    const std::vector<double> z(n_bins, 0.0);
    return BeamReturn{o, z, z, z, z, z, z};
  };

  // Linear SL - TL at distance d.
  const auto source_over_loss = [&](double d) {
    return std::pow(10.0, (sonar.source_level_db - transmission_loss(d, alpha)) / 10.0);
  };

  const std::size_t chunks = (n_rays + kRayChunk - 1) / kRayChunk;
  std::vector<Partial> partials(chunks);

  parallel_for(chunks, options.threads, [&](std::size_t chunk) {
    Partial& part = partials[chunk];
    part.beams.reserve(n_beams);
    for (const auto& o : rx) part.beams.push_back(empty_beam(o));
    part.cover.assign(n_beams, std::vector<double>(n_bins + 1, 0.0));

    auto rng = make_engine(sonar.rng_seed, ping_index, chunk);
    std::normal_distribution<double> normal;
    std::vector<double> g_rx(n_beams);
    const std::size_t end = std::min<std::size_t>(n_rays, (chunk + 1) * kRayChunk);

    for (std::size_t i = chunk * kRayChunk; i < end; ++i) {
      Vec3 w = draw_direction(rng, normal);
      if (hemisphere && w.dot(tx_axis) < 0.0) w = -w;

      const double g_tx = aperture_gain(to_beam_frame(w, tx), hl, vl);
      if (g_tx == 0.0) continue;
      bool any = false;
      for (std::size_t b = 0; b < n_beams; ++b) {
        g_rx[b] = g_tx * aperture_gain(to_beam_frame(w, rx[b]), hl, vl);
        any = any || g_rx[b] > 0.0;
      }
      if (!any) continue;

      const Ray ray{origin, w, d_max};
      const std::optional<Hit> hit = trace_ray(scene, ray);

      if (options.volume) {
        // Bins whose centre the ray reaches before stopping.
        std::size_t covered = n_bins;
        if (hit) {
          const double k = std::ceil(hit->distance_m / layout.bin_length() + 0.5) - 1.0;
          covered = std::min(n_bins, static_cast<std::size_t>(std::max(0.0, k)));
        }
        for (std::size_t b = 0; b < n_beams; ++b) part.cover[b][covered] += g_rx[b];
      }
      if (!hit) continue;

      const std::size_t bin = layout.bin_index(hit->distance_m);
      if (bin != 0) {
        const double base = source_over_loss(hit->distance_m) *
                            std::pow(10.0, hit_scatter_coeff(*hit, env, f) / 10.0) *
                            ray_patch_area(hit->distance_m, hit->grazing_rad, n_rays, solid_angle);
        for (std::size_t b = 0; b < n_beams; ++b) {
          const double v = base * g_rx[b];
          BeamReturn& br = part.beams[b];
          br.total[bin - 1] += v;
          (hit->kind == HitKind::kBottom    ? br.bottom
           : hit->kind == HitKind::kSurface ? br.surface
                                            : br.object)[bin - 1] += v;
        }
      }

      if (!options.multipath) continue;
      const std::optional<Hit> second = multipath_bounce(scene, *hit, ray);
      if (!second) continue;
      const double path = hit->distance_m + second->distance_m;
      const std::size_t bin2 = layout.bin_index(path);
      if (bin2 == 0) continue;
      const double base2 = source_over_loss(path) *
                           std::pow(10.0, hit_scatter_coeff(*second, env, f) / 10.0) *
                           ray_patch_area(path, second->grazing_rad, n_rays, solid_angle);
      for (std::size_t b = 0; b < n_beams; ++b) {
        const double v = base2 * g_rx[b];
        part.beams[b].total[bin2 - 1] += v;
        part.beams[b].multipath[bin2 - 1] += v;
      }
    }
  });

  PingReturn result{layout, sonar.rng_seed, ping_index, n_rays, {}};
  for (const auto& o : rx) result.beams.push_back(empty_beam(o));
  std::vector<std::vector<double>> cover(n_beams, std::vector<double>(n_bins + 1, 0.0));
  for (const Partial& part : partials) {
    for (std::size_t b = 0; b < n_beams; ++b) {
      BeamReturn& dst = result.beams[b];
      const BeamReturn& src = part.beams[b];
      for (std::size_t n = 0; n < n_bins; ++n) {
        dst.total[n] += src.total[n];
        dst.bottom[n] += src.bottom[n];
        dst.surface[n] += src.surface[n];
        dst.object[n] += src.object[n];
        dst.multipath[n] += src.multipath[n];
      }
      for (std::size_t k = 0; k <= n_bins; ++k) cover[b][k] += part.cover[b][k];
    }
  }

  if (options.volume) {
    const double sv = std::pow(10.0, volume_coeff(env.particle_density_db, f) / 10.0);
    const double share = solid_angle / (4.0 * kPi);
    for (std::size_t b = 0; b < n_beams; ++b) {
      BeamReturn& br = result.beams[b];
      double suffix = 0.0;
      for (std::size_t n = n_bins; n >= 1; --n) {
        suffix += cover[b][n];
        const double v = suffix * share * sv * ray_bin_volume(n, layout, n_rays) *
                         source_over_loss(bin_center(n, layout));
        br.volume[n - 1] = v;
        br.total[n - 1] += v;
      }
    }
  }

  if (options.noise) add_noise(result, sonar, env, sonar.rng_seed);
  return result;
}

void add_noise(PingReturn& p, const SonarConfig& sonar, const EnvironmentParams& env,
               std::uint64_t seed) {
  const double mean =
      std::pow(10.0, noise_level_band(sonar.frequency_khz, env, sonar.bandwidth_hz) / 10.0);
  auto rng = make_engine(seed, p.ping_index, 0, kNoiseTag);
  std::exponential_distribution<double> draw(1.0 / mean);
  for (BeamReturn& br : p.beams) {
    for (double& v : br.total) v += draw(rng);
  }
}

}  // namespace flsim
