#include "flsim/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "flsim/errors.hpp"

namespace flsim {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

// Volume of the cap of a sphere of radius d beyond a plane at distance h.
double cap_volume(double d, double h) noexcept {
  if (h >= d) return 0.0;
  const double depth = d - h;
  return std::numbers::pi * depth * depth * (2.0 * d + h) / 3.0;
}

double cut_shell(double d_outer, double d_inner, double h) noexcept {
  return cap_volume(d_outer, h) - cap_volume(d_inner, h);
}

double hemisphere_cut(double d_outer, double d_inner, double h) noexcept {
  constexpr double k = 2.0 / 3.0 * std::numbers::pi;
  const auto hemi = [](double d, double hh) {
    const double r2 = d * d - hh * hh;
    return r2 > 0.0 ? std::pow(r2, 1.5) : 0.0;
  };
  if (h < d_inner) return k * (hemi(d_outer, h) - hemi(d_inner, h));
  if (h < d_outer) return k * hemi(d_outer, h);
  return 0.0;
}

double cutoff(double d_outer, double d_inner, double h) noexcept {
  const double mid_sum = d_outer + d_inner;
  if (!(h < mid_sum / 2.0)) return 0.0;
  return std::asin(std::clamp(2.0 * h / mid_sum, 0.0, 1.0));
}

}  // namespace

BinLayout::BinLayout(double bin_length_m, std::size_t num_bins)
    : bin_length_(bin_length_m), num_bins_(num_bins) {
  if (!(bin_length_m > 0.0)) throw ValidationError("bin_length_m must be > 0");
}

BinLayout BinLayout::for_range(double d_max, double bin_length_m) {
  if (!(bin_length_m > 0.0)) throw ValidationError("bin_length_m must be > 0");
  if (!(d_max > 0.0)) throw ValidationError("maximum range must be > 0");
  auto n = static_cast<std::size_t>(std::ceil(d_max / bin_length_m - 1e-12));
  return BinLayout(bin_length_m, std::max<std::size_t>(n, 1));
}

std::size_t BinLayout::bin_index(double d) const noexcept {
  if (!(d >= 0.0)) return 0;
  const auto n = static_cast<std::size_t>(std::floor(d / bin_length_)) + 1;
  return n <= num_bins_ ? n : 0;
}

void SonarPose::validate() const {
  if (!(altitude_m > 0.0)) throw ValidationError("pose.altitude_m must be > 0");
  if (!(depth_m > 0.0)) throw ValidationError("pose.depth_m must be > 0");
  if (!std::isfinite(pitch_rad)) throw ValidationError("pose.pitch_rad must be finite");
}

BeamOrientation effective_orientation(const BeamOrientation& beam, const SonarPose& pose) {
  return BeamOrientation{beam.pitch_rad + pose.pitch_rad, beam.yaw_rad}.normalized();
}

double ring_radius(double d, double h) noexcept {
  return h < d ? std::sqrt(d * d - h * h) : 0.0;
}

double ring_area(std::size_t n, const BinLayout& layout, double h) noexcept {
  if (n == 0) return 0.0;
  const double d_n = layout.edge(n);
  if (!(h < d_n)) return 0.0;
  const double r_n = ring_radius(d_n, h);
  const double r_prev = ring_radius(layout.edge(n - 1), h);
  return std::numbers::pi * (r_n * r_n - r_prev * r_prev);
}

double ring_grazing(double d_outer, double d_inner, double h) noexcept {
  if (!(h < d_outer)) return 0.0;
  return std::asin(std::clamp(2.0 * std::abs(h) / (d_outer + d_inner), 0.0, 1.0));
}

double ring_grazing(std::size_t n, const BinLayout& layout, double h) noexcept {
  return ring_grazing(layout.edge(n), layout.edge(n - 1), h);
}

Vec3 rotate_to_sonar_frame(const Vec3& v, double pitch) noexcept {
  const double c = std::cos(pitch);
  const double s = std::sin(pitch);
  return {c * v.x + s * v.z, v.y, -s * v.x + c * v.z};
}

Vec3 to_beam_frame(const Vec3& w, const BeamOrientation& beam) noexcept {
  const double cy = std::cos(beam.yaw_rad);
  const double sy = std::sin(beam.yaw_rad);
  const Vec3 yawed{cy * w.x + sy * w.y, -sy * w.x + cy * w.y, w.z};
  return rotate_to_sonar_frame(yawed, beam.pitch_rad);
}

BeamAngles beam_angles_surface(const Vec3& v) noexcept {
  return {std::atan2(v.y, v.x), std::atan2(v.z, std::hypot(v.x, v.y))};
}

BeamAngles beam_angles_volume(const Vec3& v) noexcept {
  return {std::atan2(v.y, v.x), std::atan2(v.z, v.x)};
}

double shell_volume(double d_outer, double d_inner, double h, double h_d) noexcept {
  const double full =
      4.0 / 3.0 * std::numbers::pi * (d_outer * d_outer * d_outer - d_inner * d_inner * d_inner);
  return std::max(0.0, full - cut_shell(d_outer, d_inner, h) - cut_shell(d_outer, d_inner, h_d));
}

double shell_volume(std::size_t n, const BinLayout& layout, double h, double h_d) noexcept {
  return shell_volume(layout.edge(n), layout.edge(n - 1), h, h_d);
}

double shell_volume_hemispherical(std::size_t n, const BinLayout& layout, double h,
                                  double h_d) noexcept {
  const double d_n = layout.edge(n);
  const double d_p = layout.edge(n - 1);
  const double full = 4.0 / 3.0 * std::numbers::pi * (d_n * d_n * d_n - d_p * d_p * d_p);
  return full - hemisphere_cut(d_n, d_p, h) - hemisphere_cut(d_n, d_p, h_d);
}

CutoffAngles cutoff_angles(double d_outer, double d_inner, double h, double h_d) noexcept {
  return {cutoff(d_outer, d_inner, h), cutoff(d_outer, d_inner, h_d)};
}

CutoffAngles cutoff_angles(std::size_t n, const BinLayout& layout, double h, double h_d) noexcept {
  return cutoff_angles(layout.edge(n), layout.edge(n - 1), h, h_d);
}

VolumeGate volume_gate(double d_outer, double d_inner, double h, double h_d) noexcept {
  const double mid = 0.5 * (d_outer + d_inner);
  const CutoffAngles c = cutoff_angles(d_outer, d_inner, h, h_d);
  return {h < mid ? c.bottom_rad : kHalfPi, h_d < mid ? c.surface_rad : kHalfPi};
}

double bin_center(std::size_t n, const BinLayout& layout) noexcept {
  return layout.edge(n) - layout.bin_length() / 2.0;
}

}  // namespace flsim
