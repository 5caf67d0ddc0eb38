#pragma once

#include <cmath>

namespace flsim {

// World frame: x forward, y starboard, z positive down (depth).
struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Vec3 operator+(const Vec3& o) const noexcept { return {x + o.x, y + o.y, z + o.z}; }
  constexpr Vec3 operator-(const Vec3& o) const noexcept { return {x - o.x, y - o.y, z - o.z}; }
  constexpr Vec3 operator-() const noexcept { return {-x, -y, -z}; }
  constexpr Vec3 operator*(double s) const noexcept { return {x * s, y * s, z * s}; }
  constexpr Vec3 operator/(double s) const noexcept { return {x / s, y / s, z / s}; }
  friend constexpr Vec3 operator*(double s, const Vec3& v) noexcept { return v * s; }
  constexpr bool operator==(const Vec3&) const noexcept = default;

  [[nodiscard]] constexpr double dot(const Vec3& o) const noexcept {
    return x * o.x + y * o.y + z * o.z;
  }
  [[nodiscard]] constexpr Vec3 cross(const Vec3& o) const noexcept {
    return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
  }
  [[nodiscard]] double norm() const noexcept { return std::sqrt(dot(*this)); }
  [[nodiscard]] Vec3 normalized() const noexcept { return *this / norm(); }
  [[nodiscard]] double operator[](int i) const noexcept { return i == 0 ? x : (i == 1 ? y : z); }
};

}  // namespace flsim
