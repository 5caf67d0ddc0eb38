#include "flsim/scene.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "flsim/errors.hpp"

namespace flsim {

namespace {

constexpr double kMinDistance = 1e-9;
constexpr double kMinGrazing = 1e-9;
constexpr double kSentinelReach = 1e7;
constexpr double kInf = std::numeric_limits<double>::infinity();

bool finite(const Vec3& v) {
  return std::isfinite(v.x) && std::isfinite(v.y) && std::isfinite(v.z);
}

void check_axis(const std::vector<double>& a, const char* name) {
  if (a.size() < 2) throw ValidationError(std::string("heightfield.") + name + " needs >= 2 values");
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!std::isfinite(a[i])) {
      throw ValidationError(std::string("heightfield.") + name + " must be finite");
    }
    if (i > 0 && !(a[i] > a[i - 1])) {
      throw ValidationError(std::string("heightfield.") + name +
                            " must be strictly increasing (spacing > 0)");
    }
  }
}

std::vector<double> padded(const std::vector<double>& a) {
  std::vector<double> out;
  out.reserve(a.size() + 2);
  out.push_back(a.front() - kSentinelReach);
  out.insert(out.end(), a.begin(), a.end());
  out.push_back(a.back() + kSentinelReach);
  return out;
}

// Cell index k with g[k] <= v < g[k+1], clamped to the grid.
std::size_t cell_of(const std::vector<double>& g, double v) {
  const auto it = std::upper_bound(g.begin(), g.end(), v);
  const auto k = static_cast<std::ptrdiff_t>(it - g.begin()) - 1;
  return static_cast<std::size_t>(std::clamp<std::ptrdiff_t>(k, 0, static_cast<std::ptrdiff_t>(g.size()) - 2));
}

Hit make_hit(HitKind kind, double t, const Ray& ray, Vec3 normal) {
  if (normal.dot(ray.direction) > 0.0) normal = -normal;
  const double s = std::min(1.0, std::abs(normal.dot(ray.direction)));
  return Hit{kind, t, ray.origin + ray.direction * t, normal, std::asin(s), {}};
}

bool accept(double t, double grazing_sine, const Ray& ray) {
  return t > kMinDistance && t <= ray.remaining_range_m && grazing_sine >= std::sin(kMinGrazing);
}

std::optional<Hit> intersect_plane(double plane_z, HitKind kind, const Ray& ray) {
  const double dz = ray.direction.z;
  if (dz == 0.0) return std::nullopt;
  const double t = (plane_z - ray.origin.z) / dz;
  if (!accept(t, std::abs(dz), ray)) return std::nullopt;
  return make_hit(kind, t, ray, {0.0, 0.0, -1.0});
}

std::optional<Hit> intersect_box(const Box& box, const Ray& ray) {
  double t_near = -kInf;
  double t_far = kInf;
  int axis = -1;
  const double lo[3] = {box.min.x, box.min.y, box.min.z};
  const double hi[3] = {box.max.x, box.max.y, box.max.z};
  for (int k = 0; k < 3; ++k) {
    const double o = ray.origin[k];
    const double d = ray.direction[k];
    if (d == 0.0) {
      if (o < lo[k] || o > hi[k]) return std::nullopt;
      continue;
    }
    double t0 = (lo[k] - o) / d;
    double t1 = (hi[k] - o) / d;
    if (t0 > t1) std::swap(t0, t1);
    if (t0 > t_near) {
      t_near = t0;
      axis = k;
    }
    t_far = std::min(t_far, t1);
    if (t_near > t_far) return std::nullopt;
  }
  if (axis < 0) return std::nullopt;
  Vec3 n{};
  (axis == 0 ? n.x : axis == 1 ? n.y : n.z) = 1.0;
  if (!accept(t_near, std::abs(ray.direction[axis]), ray)) return std::nullopt;
  Hit h = make_hit(HitKind::kObject, t_near, ray, n);
  h.material = box.material;
  return h;
}

std::optional<Hit> intersect_mesh(const TriangleMesh& mesh, const Ray& ray) {
  std::optional<Hit> best;
  for (const auto& tri : mesh.triangles) {
    const Vec3& p0 = mesh.vertices[tri[0]];
    const Vec3 e1 = mesh.vertices[tri[1]] - p0;
    const Vec3 e2 = mesh.vertices[tri[2]] - p0;
    const Vec3 p = ray.direction.cross(e2);
    const double det = e1.dot(p);
    if (std::abs(det) < 1e-15 * e1.norm() * e2.norm()) continue;
    const double inv = 1.0 / det;
    const Vec3 s = ray.origin - p0;
    const double u = s.dot(p) * inv;
    if (u < 0.0 || u > 1.0) continue;
    const Vec3 q = s.cross(e1);
    const double v = ray.direction.dot(q) * inv;
    if (v < 0.0 || u + v > 1.0) continue;
    const double t = e2.dot(q) * inv;
    if (best && t >= best->distance_m) continue;
    const Vec3 n = e1.cross(e2).normalized();
    if (!accept(t, std::abs(n.dot(ray.direction)), ray)) continue;
    best = make_hit(HitKind::kObject, t, ray, n);
    best->material = mesh.material;
  }
  return best;
}

void keep_nearest(std::optional<Hit>& best, std::optional<Hit> candidate) {
  if (candidate && (!best || candidate->distance_m < best->distance_m)) best = std::move(candidate);
}

}  // namespace

Heightfield::Heightfield(std::vector<double> xs, std::vector<double> ys, std::vector<double> depths)
    : xs_(std::move(xs)), ys_(std::move(ys)), depths_(std::move(depths)) {
  check_axis(xs_, "xs");
  check_axis(ys_, "ys");
  if (depths_.size() != xs_.size() * ys_.size()) {
    throw ValidationError("heightfield.depths must hold xs.size() * ys.size() = " +
                          std::to_string(xs_.size() * ys_.size()) + " values");
  }
  for (double z : depths_) {
    if (!std::isfinite(z)) throw ValidationError("heightfield.depths must be finite");
  }
  gx_ = padded(xs_);
  gy_ = padded(ys_);
  const std::size_t nx = xs_.size();
  const std::size_t ny = ys_.size();
  gz_.resize(gx_.size() * gy_.size());
  for (std::size_t j = 0; j < gy_.size(); ++j) {
    const std::size_t sj = std::clamp<std::size_t>(j, 1, ny) - 1;
    for (std::size_t i = 0; i < gx_.size(); ++i) {
      const std::size_t si = std::clamp<std::size_t>(i, 1, nx) - 1;
      gz_[j * gx_.size() + i] = depths_[sj * nx + si];
    }
  }
  const auto [lo, hi] = std::minmax_element(depths_.begin(), depths_.end());
  zmin_ = *lo;
  zmax_ = *hi;
}

double Heightfield::depth_at(double x, double y) const noexcept {
  const double cx = std::clamp(x, xs_.front(), xs_.back());
  const double cy = std::clamp(y, ys_.front(), ys_.back());
  const std::size_t i = cell_of(gx_, cx);
  const std::size_t j = cell_of(gy_, cy);
  const double u = (cx - gx_[i]) / (gx_[i + 1] - gx_[i]);
  const double v = (cy - gy_[j]) / (gy_[j + 1] - gy_[j]);
  return (1 - u) * (1 - v) * grid_depth(i, j) + u * (1 - v) * grid_depth(i + 1, j) +
         (1 - u) * v * grid_depth(i, j + 1) + u * v * grid_depth(i + 1, j + 1);
}

std::optional<Hit> Heightfield::intersect(const Ray& ray) const {
  const Vec3& o = ray.origin;
  const Vec3& d = ray.direction;

  // Only the depth slab [zmin, zmax] can hold an intersection.
  double t_lo = 0.0;
  double t_hi = ray.remaining_range_m;
  if (d.z == 0.0) {
    if (o.z < zmin_ || o.z > zmax_) return std::nullopt;
  } else {
    double ta = (zmin_ - o.z) / d.z;
    double tb = (zmax_ - o.z) / d.z;
    if (ta > tb) std::swap(ta, tb);
    t_lo = std::max(t_lo, ta);
    t_hi = std::min(t_hi, tb);
  }
  if (!(t_hi >= t_lo)) return std::nullopt;

  const Vec3 start = o + d * t_lo;
  std::size_t i = cell_of(gx_, start.x);
  std::size_t j = cell_of(gy_, start.y);
  double t = t_lo;
  const std::size_t nx = gx_.size();
  const std::size_t ny = gy_.size();

  while (true) {
    const double tx = d.x > 0.0   ? (gx_[i + 1] - o.x) / d.x
                      : d.x < 0.0 ? (gx_[i] - o.x) / d.x
                                  : kInf;
    const double ty = d.y > 0.0   ? (gy_[j + 1] - o.y) / d.y
                      : d.y < 0.0 ? (gy_[j] - o.y) / d.y
                                  : kInf;
    const double t_end = std::min({tx, ty, t_hi});

    // f(t) = ray depth - bilinear depth = A t^2 + B t + C within this cell.
    const double wx = gx_[i + 1] - gx_[i];
    const double wy = gy_[j + 1] - gy_[j];
    const double u0 = (o.x - gx_[i]) / wx;
    const double v0 = (o.y - gy_[j]) / wy;
    const double du = d.x / wx;
    const double dv = d.y / wy;
    const double a = grid_depth(i, j);
    const double b = grid_depth(i + 1, j) - a;
    const double c = grid_depth(i, j + 1) - a;
    const double e = a - grid_depth(i + 1, j) - grid_depth(i, j + 1) + grid_depth(i + 1, j + 1);
    const double qa = -e * du * dv;
    const double qb = d.z - (b * du + c * dv + e * (u0 * dv + v0 * du));
    const double qc = o.z - (a + b * u0 + c * v0 + e * u0 * v0);

    double roots[2];
    int count = 0;
    const double scale = std::abs(qb) + std::abs(qc) + 1e-300;
    if (std::abs(qa) * std::max(1.0, t_end * t_end) < 1e-14 * scale) {
      if (qb != 0.0) roots[count++] = -qc / qb;
    } else {
      const double disc = qb * qb - 4.0 * qa * qc;
      if (disc >= 0.0) {
        const double q = -0.5 * (qb + std::copysign(std::sqrt(disc), qb));
        roots[count++] = q / qa;
        if (q != 0.0) roots[count++] = qc / q;
      }
    }
    if (count == 2 && roots[1] < roots[0]) std::swap(roots[0], roots[1]);
    const double slack = 1e-12 * std::max(1.0, t_end);
    for (int k = 0; k < count; ++k) {
      const double r = roots[k];
      if (r < t - slack || r > t_end + slack) continue;
      const double u = u0 + du * r;
      const double v = v0 + dv * r;
      const Vec3 n = Vec3{(b + e * v) / wx, (c + e * u) / wy, -1.0}.normalized();
      if (!accept(r, std::abs(n.dot(d)), ray)) continue;
      return make_hit(HitKind::kBottom, r, ray, n);
    }

    if (t_end >= t_hi) return std::nullopt;
    t = t_end;
    if (tx <= ty) {
      if (d.x > 0.0 ? ++i >= nx - 1 : i-- == 0) return std::nullopt;
    }
    if (ty <= tx) {
      if (d.y > 0.0 ? ++j >= ny - 1 : j-- == 0) return std::nullopt;
    }
  }
}

void Scene::validate() const {
  if (const auto* flat = std::get_if<FlatBottom>(&bottom)) {
    if (!(std::isfinite(flat->depth_m) && flat->depth_m > 0.0)) {
      throw ValidationError("scene.bottom.depth_m must be finite and > 0 (below the surface)");
    }
  } else if (const auto* hf = std::get_if<Heightfield>(&bottom)) {
    if (!(hf->min_depth() > 0.0)) {
      throw ValidationError("scene.bottom.heightfield depths must be > 0 (below the surface)");
    }
  }
  for (std::size_t k = 0; k < boxes.size(); ++k) {
    const Box& b = boxes[k];
    const std::string where = "scene.objects.boxes[" + std::to_string(k) + "]";
    if (!finite(b.min) || !finite(b.max)) throw ValidationError(where + " must be finite");
    if (!(b.min.x < b.max.x && b.min.y < b.max.y && b.min.z < b.max.z)) {
      throw ValidationError(where + " needs min < max on every axis");
    }
    b.material.validate();
  }
  for (std::size_t k = 0; k < meshes.size(); ++k) {
    const TriangleMesh& m = meshes[k];
    const std::string where = "scene.objects.meshes[" + std::to_string(k) + "]";
    for (const Vec3& v : m.vertices) {
      if (!finite(v)) throw ValidationError(where + ".vertices must be finite");
    }
    for (const auto& tri : m.triangles) {
      for (std::uint32_t idx : tri) {
        if (idx >= m.vertices.size()) {
          throw ValidationError(where + ".triangles index " + std::to_string(idx) +
                                " out of range");
        }
      }
    }
    m.material.validate();
  }
}

std::optional<Hit> trace_ray(const Scene& scene, const Ray& ray) {
  std::optional<Hit> best;
  if (scene.surface) keep_nearest(best, intersect_plane(0.0, HitKind::kSurface, ray));
  if (const auto* flat = std::get_if<FlatBottom>(&scene.bottom)) {
    keep_nearest(best, intersect_plane(flat->depth_m, HitKind::kBottom, ray));
  } else if (const auto* hf = std::get_if<Heightfield>(&scene.bottom)) {
    Ray clipped = ray;
    if (best) clipped.remaining_range_m = best->distance_m;
    keep_nearest(best, hf->intersect(clipped));
  }
  for (const Box& box : scene.boxes) keep_nearest(best, intersect_box(box, ray));
  for (const TriangleMesh& mesh : scene.meshes) keep_nearest(best, intersect_mesh(mesh, ray));
  return best;
}

Vec3 reflect(const Vec3& d, const Vec3& n) noexcept { return d - n * (2.0 * d.dot(n)); }

}  // namespace flsim
