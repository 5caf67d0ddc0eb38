#include "flsim/nullmodel.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <utility>

#include "flsim/quadrature.hpp"
#include "flsim/scatter.hpp"

namespace flsim {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalfPi = kPi / 2.0;
constexpr double kDbFloor = -300.0;

// Row-major world-to-beam rotation.
struct Frame {
  std::array<double, 9> m{};
  double pitch = 0.0;

  explicit Frame(const BeamOrientation& beam) : pitch(beam.pitch_rad) {
    const Vec3 ex = to_beam_frame({1, 0, 0}, beam);
    const Vec3 ey = to_beam_frame({0, 1, 0}, beam);
    const Vec3 ez = to_beam_frame({0, 0, 1}, beam);
    m = {ex.x, ey.x, ez.x, ex.y, ey.y, ez.y, ex.z, ey.z, ez.z};
  }

  [[nodiscard]] Vec3 apply(const Vec3& w) const noexcept {
    return {m[0] * w.x + m[1] * w.y + m[2] * w.z, m[3] * w.x + m[4] * w.y + m[5] * w.z,
            m[6] * w.x + m[7] * w.y + m[8] * w.z};
  }
};

struct Apertures {
  double horizontal_wl;
  double vertical_wl;
};

Apertures apertures(const SonarConfig& sonar, double c) {
  const double lambda = sonar.wavelength_m(c);
  return {sonar.horizontal_len_m / lambda, sonar.vertical_len_m / lambda};
}

// Angles t in [-pi, pi] where A cos t + B sin t + C = 0.
void add_gate_crossings(double a, double b, double c, std::vector<double>& out) {
  const double k = std::hypot(a, b);
  if (k == 0.0) return;
  const double r = -c / k;
  if (std::abs(r) > 1.0) return;
  const double base = std::atan2(b, a);
  const double spread = std::acos(r);
  out.push_back(wrap_angle(base + spread));
  out.push_back(wrap_angle(base - spread));
}

// Crossings of the front-hemisphere gate for w = (rho cos t, rho sin t, z).
void ring_crossings(const Frame& f, double rho, double z, std::vector<double>& out) {
  add_gate_crossings(f.m[0] * rho, f.m[1] * rho, f.m[2] * z, out);
}

double dB_gain_surface_convention(const Vec3& v, const Apertures& ap) {
  if (!(v.x > 0.0)) return 0.0;  // outside the gate counts as 0 dB here
  const double inv = 1.0 / v.norm();
  const double ab = std::abs(sinc(v.y * inv * ap.horizontal_wl) * sinc(v.z * inv * ap.vertical_wl));
  return ab > 0.0 ? std::max(kDbFloor, 20.0 * std::log10(ab)) : kDbFloor;
}

double dB_gain_volume_convention(const Vec3& v, const Apertures& ap) {
  const BeamAngles a = beam_angles_volume(v);
  const double alpha = sinc(std::sin(a.theta_rad) * std::cos(a.psi_rad) * ap.horizontal_wl);
  const double beta = sinc(std::sin(a.psi_rad) * ap.vertical_wl);
  const double ab = std::abs(alpha * beta);
  return ab > 0.0 ? std::max(kDbFloor, 20.0 * std::log10(ab)) : kDbFloor;
}

double linear_gain_volume_convention(const Vec3& v, const Apertures& ap) {
  if (!(v.x > 0.0)) return 0.0;
  const BeamAngles a = beam_angles_volume(v);
  const double ab = sinc(std::sin(a.theta_rad) * std::cos(a.psi_rad) * ap.horizontal_wl) *
                    sinc(std::sin(a.psi_rad) * ap.vertical_wl);
  return ab * ab;
}

QuadratureSettings settings_for(const NullModelOptions& o, bool relative, double tol) {
  QuadratureSettings s;
  s.tolerance = tol;
  s.relative_db = relative;
  s.max_panels = o.max_panels;
  return s;
}

// Inner azimuth integral of the two-way linear gain at depression phi.
double azimuth_integral(double phi, const Frame& ft, const Frame& fr, const Apertures& ap,
                        const NullModelOptions& o) {
  const double rho = std::cos(phi);
  const double z = std::sin(phi);
  std::vector<double> cuts;
  ring_crossings(ft, rho, z, cuts);
  ring_crossings(fr, rho, z, cuts);
  const auto integrand = [&](double az) {
    const Vec3 w{rho * std::cos(az), rho * std::sin(az), z};
    const double gt = linear_gain_volume_convention(ft.apply(w), ap);
    if (gt == 0.0) return 0.0;
    return gt * linear_gain_volume_convention(fr.apply(w), ap);
  };
  return integrate_adaptive(integrand, -kPi, kPi, std::move(cuts),
                            settings_for(o, true, o.quadrature_tol_db / 10.0));
}

// Angle-square samples for the dB-domain sphere average of one pattern,
// sorted by upward vertical angle with a running sum of gains.
struct PrintedSphereTable {
  std::vector<double> psi_up;
  std::vector<double> cumulative_db;  // cumulative_db[i] = sum of first i samples
  double pitch = 0.0;
  double cell_measure = 0.0;

  PrintedSphereTable(const Frame& f, const Apertures& ap, std::size_t grid) : pitch(f.pitch) {
    const double step = 2.0 * kPi / static_cast<double>(grid);
    cell_measure = step * step;
    std::vector<std::pair<double, double>> samples;
    samples.reserve(grid * grid / 2);
    for (std::size_t i = 0; i < grid; ++i) {
      const double th = -kPi + (static_cast<double>(i) + 0.5) * step;
      for (std::size_t j = 0; j < grid; ++j) {
        const double tv = -kPi + (static_cast<double>(j) + 0.5) * step;
        const Vec3 w{std::cos(th) * std::cos(tv), std::sin(th), std::sin(tv)};
        const Vec3 v = f.apply(w);
        if (!(v.x > 0.0)) continue;
        samples.emplace_back(-beam_angles_volume(v).psi_rad, dB_gain_volume_convention(v, ap));
      }
    }
    std::sort(samples.begin(), samples.end());
    psi_up.reserve(samples.size());
    cumulative_db.assign(1, 0.0);
    for (const auto& [p, g] : samples) {
      psi_up.push_back(p);
      cumulative_db.push_back(cumulative_db.back() + g);
    }
  }

  // (1/pi^2) integral of the gated dB pattern; 0 dB outside the gates.
  [[nodiscard]] double average(const VolumeGate& gate) const {
    const double lo = -gate.max_depression_rad + pitch;
    const double hi = gate.max_elevation_rad + pitch;
    if (!(hi > lo)) return 0.0;
    const auto first = std::upper_bound(psi_up.begin(), psi_up.end(), lo) - psi_up.begin();
    const auto last = std::lower_bound(psi_up.begin(), psi_up.end(), hi) - psi_up.begin();
    if (last <= first) return 0.0;
    return (cumulative_db[static_cast<std::size_t>(last)] -
            cumulative_db[static_cast<std::size_t>(first)]) *
           cell_measure / (kPi * kPi);
  }
};

constexpr std::size_t kPrintedGrid = 512;
constexpr std::size_t kProfileNodes = 2049;

}  // namespace

Level avg_ring_bp_loss(double rho, double plane_z, const BeamPair& beams, const SonarConfig& sonar,
                       double c, const NullModelOptions& o) {
  const Frame ft(beams.transmit);
  const Frame fr(beams.receive);
  const Apertures ap = apertures(sonar, c);
  std::vector<double> cuts;
  ring_crossings(ft, rho, plane_z, cuts);
  ring_crossings(fr, rho, plane_z, cuts);

  if (o.averaging == BeamAveraging::kPrintedDb) {
    double total_db = 0.0;
    for (const Frame* f : {&ft, &fr}) {
      std::vector<double> own;
      ring_crossings(*f, rho, plane_z, own);
      const auto integrand = [&](double t) {
        return dB_gain_surface_convention(f->apply({rho * std::cos(t), rho * std::sin(t), plane_z}),
                                          ap);
      };
      total_db += integrate_adaptive(integrand, -kPi, kPi, std::move(own),
                                     settings_for(o, false, o.quadrature_tol_db * kPi)) /
                  kPi;
    }
    return Level::db(total_db);
  }

  const auto integrand = [&](double t) {
    const Vec3 w{rho * std::cos(t), rho * std::sin(t), plane_z};
    const double gt = aperture_gain(ft.apply(w), ap.horizontal_wl, ap.vertical_wl);
    if (gt == 0.0) return 0.0;
    return gt * aperture_gain(fr.apply(w), ap.horizontal_wl, ap.vertical_wl);
  };
  const double integral = integrate_adaptive(integrand, -kPi, kPi, std::move(cuts),
                                             settings_for(o, true, o.quadrature_tol_db));
  return Level::from_linear(integral / (2.0 * kPi));
}

Level avg_ring_bp_loss(std::size_t n, const BinLayout& layout, const SonarPose& pose,
                       const BeamPair& beams, const SonarConfig& sonar, double c,
                       const NullModelOptions& o) {
  const double h = pose.altitude_m;
  const double rho = 0.5 * (ring_radius(layout.edge(n), h) + ring_radius(layout.edge(n - 1), h));
  return avg_ring_bp_loss(rho, h, beams, sonar, c, o);
}

Level avg_sphere_bp_loss(const VolumeGate& gate, const BeamPair& beams, const SonarConfig& sonar,
                         double c, const NullModelOptions& o) {
  if (o.averaging == BeamAveraging::kPrintedDb) {
    return SphereProfile(beams, sonar, c, o).average(gate);
  }
  const double lo = -std::min(gate.max_elevation_rad, kHalfPi);
  const double hi = std::min(gate.max_depression_rad, kHalfPi);
  if (!(hi > lo)) return Level::none();
  const Frame ft(beams.transmit);
  const Frame fr(beams.receive);
  const Apertures ap = apertures(sonar, c);
  const auto outer = [&](double phi) {
    return std::cos(phi) * azimuth_integral(phi, ft, fr, ap, o);
  };
  const double integral =
      integrate_adaptive(outer, lo, hi, {}, settings_for(o, true, o.quadrature_tol_db));
  return Level::from_linear(integral / (4.0 * kPi));
}

Level avg_sphere_bp_loss(std::size_t n, const BinLayout& layout, const SonarPose& pose,
                         const BeamPair& beams, const SonarConfig& sonar, double c,
                         const NullModelOptions& o) {
  return avg_sphere_bp_loss(
      volume_gate(layout.edge(n), layout.edge(n - 1), pose.altitude_m, pose.depth_m), beams, sonar,
      c, o);
}

struct SphereProfile::Impl {
  BeamAveraging averaging = BeamAveraging::kLinear;
  // Linear mode: cumulative integral of cos(phi)·g(phi) over depression phi.
  std::vector<double> phi;
  std::vector<double> g;
  std::vector<double> cumulative;
  // Printed mode.
  std::vector<PrintedSphereTable> printed;

  [[nodiscard]] double cumulative_at(double x) const {
    if (x <= phi.front()) return 0.0;
    if (x >= phi.back()) return cumulative.back();
    const double step = phi[1] - phi[0];
    const auto k = std::min<std::size_t>(static_cast<std::size_t>((x - phi.front()) / step),
                                         phi.size() - 2);
    const double t = x - phi[k];
    return cumulative[k] + g[k] * t + (g[k + 1] - g[k]) * t * t / (2.0 * step);
  }
};

SphereProfile::SphereProfile(const BeamPair& beams, const SonarConfig& sonar, double c,
                             const NullModelOptions& o)
    : impl_(std::make_unique<Impl>()) {
  impl_->averaging = o.averaging;
  const Frame ft(beams.transmit);
  const Frame fr(beams.receive);
  const Apertures ap = apertures(sonar, c);
  if (o.averaging == BeamAveraging::kPrintedDb) {
    impl_->printed.emplace_back(ft, ap, kPrintedGrid);
    impl_->printed.emplace_back(fr, ap, kPrintedGrid);
    return;
  }
  const std::size_t k = kProfileNodes;
  impl_->phi.resize(k);
  impl_->g.resize(k);
  impl_->cumulative.assign(k, 0.0);
  const double step = kPi / static_cast<double>(k - 1);
  for (std::size_t i = 0; i < k; ++i) {
    const double phi = -kHalfPi + step * static_cast<double>(i);
    impl_->phi[i] = phi;
    impl_->g[i] = std::max(0.0, std::cos(phi)) * azimuth_integral(phi, ft, fr, ap, o);
  }
  for (std::size_t i = 1; i < k; ++i) {
    impl_->cumulative[i] = impl_->cumulative[i - 1] + 0.5 * step * (impl_->g[i - 1] + impl_->g[i]);
  }
}

SphereProfile::~SphereProfile() = default;
SphereProfile::SphereProfile(SphereProfile&&) noexcept = default;
SphereProfile& SphereProfile::operator=(SphereProfile&&) noexcept = default;

Level SphereProfile::average(const VolumeGate& gate) const {
  if (impl_->averaging == BeamAveraging::kPrintedDb) {
    return Level::db(impl_->printed[0].average(gate) + impl_->printed[1].average(gate));
  }
  const double lo = -std::min(gate.max_elevation_rad, kHalfPi);
  const double hi = std::min(gate.max_depression_rad, kHalfPi);
  if (!(hi > lo)) return Level::none();
  const double integral = impl_->cumulative_at(hi) - impl_->cumulative_at(lo);
  return Level::from_linear(integral / (4.0 * kPi));
}

std::size_t cells_per_bin(double bin_length, double resolution) noexcept {
  const double m = std::floor(bin_length / resolution + 1e-9);
  return m < 1.0 ? 1 : static_cast<std::size_t>(m);
}

BinLayout layout_for(const EnvironmentParams& env, const SonarConfig& sonar) {
  return BinLayout::for_range(max_range(sound_speed(env), sonar.ping_rate_hz),
                              sonar.bin_length_m);
}

namespace {

struct Propagation {
  double c;
  double alpha;
  std::size_t cells;
};

Propagation propagation(const EnvironmentParams& env, const SonarConfig& sonar) {
  env.validate();
  sonar.validate();
  const double c = sound_speed(env);
  return {c, absorption_coeff(sonar.frequency_khz, env, c),
          cells_per_bin(sonar.bin_length_m, range_resolution(c, sonar.bandwidth_hz))};
}

template <class Coefficient>
std::vector<Level> plane_return_bins(const EnvironmentParams& env, const SonarConfig& sonar,
                                     const BeamPair& beams, const BinLayout& layout,
                                     double plane_distance, double plane_z, Coefficient coeff,
                                     const NullModelOptions& o) {
  const Propagation p = propagation(env, sonar);
  const double cell_len = layout.bin_length() / static_cast<double>(p.cells);
  std::vector<Level> out(layout.num_bins(), Level::none());
  std::vector<Level> cells;
  for (std::size_t n = 1; n <= layout.num_bins(); ++n) {
    if (!(plane_distance < layout.edge(n))) continue;
    cells.clear();
    for (std::size_t k = 0; k < p.cells; ++k) {
      const double a = layout.edge(n - 1) + cell_len * static_cast<double>(k);
      const double b = k + 1 == p.cells ? layout.edge(n) : a + cell_len;
      if (!(plane_distance < b)) continue;
      const double ra = ring_radius(a, plane_distance);
      const double rb = ring_radius(b, plane_distance);
      const double area = kPi * (rb * rb - ra * ra);
      const double grazing = ring_grazing(b, a, plane_distance);
      const Level bp = avg_ring_bp_loss(0.5 * (ra + rb), plane_z, beams, sonar, p.c, o);
      const double tl = transmission_loss(0.5 * (a + b), p.alpha);
      cells.push_back(
          reverb_level(sonar.source_level_db, tl, bp, Level::db(0.0), coeff(grazing), area));
    }
    out[n - 1] = power_sum(cells);
  }
  return out;
}

}  // namespace

std::vector<Level> bottom_return_bins(const EnvironmentParams& env, const SonarConfig& sonar,
                                      const SonarPose& pose, const BeamPair& beams,
                                      const BinLayout& layout, const NullModelOptions& o) {
  pose.validate();
  const auto coeff = [&](double grazing) {
    return bottom_coeff(env.bottom_type, grazing, sonar.frequency_khz);
  };
  return plane_return_bins(env, sonar, beams, layout, pose.altitude_m, pose.altitude_m, coeff, o);
}

std::vector<Level> surface_return_bins(const EnvironmentParams& env, const SonarConfig& sonar,
                                       const SonarPose& pose, const BeamPair& beams,
                                       const BinLayout& layout, const NullModelOptions& o) {
  pose.validate();
  const auto coeff = [&](double grazing) {
    return surface_coeff(env.wind_knots, grazing, sonar.frequency_khz);
  };
  return plane_return_bins(env, sonar, beams, layout, pose.depth_m, -pose.depth_m, coeff, o);
}

std::vector<Level> volume_return_bins(const EnvironmentParams& env, const SonarConfig& sonar,
                                      const SonarPose& pose, const BeamPair& beams,
                                      const BinLayout& layout, const NullModelOptions& o) {
  pose.validate();
  const Propagation p = propagation(env, sonar);
  const double sv = volume_coeff(env.particle_density_db, sonar.frequency_khz);
  const SphereProfile profile(beams, sonar, p.c, o);
  const double cell_len = layout.bin_length() / static_cast<double>(p.cells);
  std::vector<Level> out(layout.num_bins(), Level::none());
  std::vector<Level> cells(p.cells);
  for (std::size_t n = 1; n <= layout.num_bins(); ++n) {
    for (std::size_t k = 0; k < p.cells; ++k) {
      const double a = layout.edge(n - 1) + cell_len * static_cast<double>(k);
      const double b = k + 1 == p.cells ? layout.edge(n) : a + cell_len;
      const double volume = 4.0 / 3.0 * kPi * (b * b * b - a * a * a);
      const Level bp = profile.average(volume_gate(b, a, pose.altitude_m, pose.depth_m));
      const double tl = transmission_loss(0.5 * (a + b), p.alpha);
      cells[k] = reverb_level(sonar.source_level_db, tl, bp, Level::db(0.0), sv, volume);
    }
    out[n - 1] = power_sum(cells);
  }
  return out;
}

NullModelReturn expected_null(const EnvironmentParams& env, const SonarConfig& sonar,
                              const SonarPose& pose, const BeamPair& beams,
                              const BinLayout& layout, const NullModelOptions& o) {
  const std::size_t n_bins = layout.num_bins();
  const std::vector<Level> none(n_bins, Level::none());
  const std::vector<Level> bottom =
      o.bottom ? bottom_return_bins(env, sonar, pose, beams, layout, o) : none;
  const std::vector<Level> surface =
      o.surface ? surface_return_bins(env, sonar, pose, beams, layout, o) : none;
  const std::vector<Level> volume =
      o.volume ? volume_return_bins(env, sonar, pose, beams, layout, o) : none;

  NullModelReturn result{layout, pose, beams, {}};
  result.bins.reserve(n_bins);
  for (std::size_t n = 1; n <= n_bins; ++n) {
    const std::size_t i = n - 1;
    result.bins.push_back({n, bin_center(n, layout), power_sum({bottom[i], surface[i], volume[i]}),
                           bottom[i], surface[i], volume[i]});
  }
  return result;
}

}  // namespace flsim
