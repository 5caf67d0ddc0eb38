#pragma once

// Geometry the simulated rays intersect. World frame: x forward, y starboard,
// z depth (positive down). The sea surface is the plane z = 0.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "flsim/scatter.hpp"
#include "flsim/vec3.hpp"

namespace flsim {

struct Ray {
  Vec3 origin;
  Vec3 direction;  ///< unit length
  double remaining_range_m = 0.0;
};

enum class HitKind { kBottom, kSurface, kObject };

struct Hit {
  HitKind kind = HitKind::kBottom;
  double distance_m = 0.0;
  Vec3 point;
  Vec3 normal;  ///< unit, facing the incoming ray
  double grazing_rad = 0.0;
  ObjectMaterial material;  ///< meaningful for objects only
};

struct FlatBottom {
  double depth_m = 12.0;

  bool operator==(const FlatBottom&) const = default;
};

/// Rectilinear grid of water depths with bilinear patches. Outside the grid
/// the edge values extend outward.
class Heightfield {
 public:
  Heightfield() = default;
  /// depths is row-major: depths[j * xs.size() + i] is the depth at (xs[i], ys[j]).
  Heightfield(std::vector<double> xs, std::vector<double> ys, std::vector<double> depths);

  [[nodiscard]] const std::vector<double>& xs() const noexcept { return xs_; }
  [[nodiscard]] const std::vector<double>& ys() const noexcept { return ys_; }
  [[nodiscard]] const std::vector<double>& depths() const noexcept { return depths_; }
  [[nodiscard]] double min_depth() const noexcept { return zmin_; }
  [[nodiscard]] double max_depth() const noexcept { return zmax_; }

  [[nodiscard]] double depth_at(double x, double y) const noexcept;
  [[nodiscard]] std::optional<Hit> intersect(const Ray& ray) const;

  bool operator==(const Heightfield& o) const {
    return xs_ == o.xs_ && ys_ == o.ys_ && depths_ == o.depths_;
  }

 private:
  std::vector<double> xs_, ys_, depths_;
  // Grid padded with one far sentinel line per side carrying the edge values.
  std::vector<double> gx_, gy_, gz_;
  double zmin_ = 0.0, zmax_ = 0.0;

  [[nodiscard]] double grid_depth(std::size_t i, std::size_t j) const noexcept {
    return gz_[j * gx_.size() + i];
  }
};

struct Box {
  Vec3 min;
  Vec3 max;
  ObjectMaterial material;

  bool operator==(const Box&) const = default;
};

struct TriangleMesh {
  std::vector<Vec3> vertices;
  std::vector<std::array<std::uint32_t, 3>> triangles;
  ObjectMaterial material;

  bool operator==(const TriangleMesh&) const = default;
};

using Bottom = std::variant<std::monostate, FlatBottom, Heightfield>;

struct Scene {
  bool surface = true;
  Bottom bottom = FlatBottom{};
  std::vector<Box> boxes;
  std::vector<TriangleMesh> meshes;

  /// Throws ValidationError on non-finite geometry, inverted boxes, bad
  /// mesh indices, or a bottom that reaches the surface.
  void validate() const;
  bool operator==(const Scene&) const = default;
};

/// Nearest intersection within ray.remaining_range_m, or nothing. Hits at
/// grazing below 1e-9 rad count as misses.
[[nodiscard]] std::optional<Hit> trace_ray(const Scene& scene, const Ray& ray);

/// Specular reflection d - 2 (d.n) n.
[[nodiscard]] Vec3 reflect(const Vec3& direction, const Vec3& normal) noexcept;

}  // namespace flsim
