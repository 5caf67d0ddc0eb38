#include "flsim/scenario.hpp"

#include <yaml-cpp/yaml.h>

#include <cmath>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

#include "flsim/detect.hpp"
#include "flsim/errors.hpp"

namespace flsim {

namespace {

constexpr double kDeg = std::numbers::pi / 180.0;

std::string join(const std::string& path, const std::string& key) {
  return path.empty() ? key : path + "." + key;
}

std::string indexed(const std::string& path, std::size_t i) {
  return path + "[" + std::to_string(i) + "]";
}

double to_double(const YAML::Node& n, const std::string& path) {
  if (!n.IsScalar()) throw ValidationError(path + ": expected a number");
  double v = 0.0;
  try {
    v = n.as<double>();
  } catch (const YAML::Exception&) {
    throw ValidationError(path + ": expected a number, got '" + n.Scalar() + "'");
  }
  if (!std::isfinite(v)) throw ValidationError(path + ": must be finite");
  return v;
}

std::uint64_t to_count(const YAML::Node& n, const std::string& path) {
  if (!n.IsScalar()) throw ValidationError(path + ": expected a non-negative integer");
  const std::string& s = n.Scalar();
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
    throw ValidationError(path + ": expected a non-negative integer, got '" + s + "'");
  }
  try {
    return std::stoull(s);
  } catch (const std::exception&) {
    throw ValidationError(path + ": integer out of range");
  }
}

bool to_bool(const YAML::Node& n, const std::string& path) {
  try {
    if (n.IsScalar()) return n.as<bool>();
  } catch (const YAML::Exception&) {
  }
  throw ValidationError(path + ": expected true or false");
}

std::string to_string(const YAML::Node& n, const std::string& path) {
  if (!n.IsScalar()) throw ValidationError(path + ": expected a string");
  return n.Scalar();
}

std::vector<double> to_doubles(const YAML::Node& n, const std::string& path) {
  if (!n.IsSequence()) throw ValidationError(path + ": expected a list of numbers");
  std::vector<double> out;
  out.reserve(n.size());
  for (std::size_t i = 0; i < n.size(); ++i) out.push_back(to_double(n[i], indexed(path, i)));
  return out;
}

Vec3 to_vec3(const YAML::Node& n, const std::string& path) {
  const std::vector<double> v = to_doubles(n, path);
  if (v.size() != 3) throw ValidationError(path + ": expected [x, y, z]");
  return {v[0], v[1], v[2]};
}

// A mapping whose keys must all be consumed.
class Section {
 public:
  Section(const YAML::Node& node, std::string path) : node_(node), path_(std::move(path)) {
    if (!node_.IsMap()) {
      throw ValidationError((path_.empty() ? std::string("document") : path_) +
                            ": expected a mapping");
    }
  }

  [[nodiscard]] const std::string& path() const { return path_; }
  [[nodiscard]] std::string at(const std::string& key) const { return join(path_, key); }

  [[nodiscard]] bool has(const std::string& key) const { return static_cast<bool>(node_[key]); }

  YAML::Node take(const std::string& key) {
    used_.insert(key);
    return node_[key];
  }

  YAML::Node require(const std::string& key) {
    if (!has(key)) throw ValidationError(at(key) + ": required");
    return take(key);
  }

  double number(const std::string& key, double fallback) {
    return has(key) ? to_double(take(key), at(key)) : fallback;
  }
  double number(const std::string& key) { return to_double(require(key), at(key)); }
  std::uint64_t count(const std::string& key, std::uint64_t fallback) {
    return has(key) ? to_count(take(key), at(key)) : fallback;
  }
  bool flag(const std::string& key, bool fallback) {
    return has(key) ? to_bool(take(key), at(key)) : fallback;
  }
  std::string text(const std::string& key, const std::string& fallback) {
    return has(key) ? to_string(take(key), at(key)) : fallback;
  }

  Section child(const std::string& key) { return Section(require(key), at(key)); }

  /// Angle given as <stem>_deg or <stem>_rad (not both), in radians.
  double angle(const std::string& stem, double fallback_rad = 0.0) {
    const bool deg = has(stem + "_deg");
    const bool rad = has(stem + "_rad");
    if (deg && rad) throw ValidationError(at(stem) + ": give either _deg or _rad, not both");
    if (deg) return number(stem + "_deg") * kDeg;
    if (rad) return number(stem + "_rad");
    return fallback_rad;
  }

  /// Length given as <stem>_m or <stem>_wavelengths (not both), in metres.
  double length(const std::string& stem, double wavelength_m, double fallback_m) {
    const bool m = has(stem + "_m");
    const bool wl = has(stem + "_wavelengths");
    if (m && wl) throw ValidationError(at(stem) + ": give either _m or _wavelengths, not both");
    if (m) return number(stem + "_m");
    if (wl) return number(stem + "_wavelengths") * wavelength_m;
    return fallback_m;
  }

  void finish() const {
    for (const auto& kv : node_) {
      const std::string key = kv.first.Scalar();
      if (!used_.count(key)) throw ValidationError(at(key) + ": unknown key");
    }
  }

 private:
  YAML::Node node_;
  std::string path_;
  std::set<std::string> used_;
};

template <class F>
auto rethrow_with(const std::string& path, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ValidationError& e) {
    const std::string what = e.what();
    if (what.rfind(path, 0) == 0) throw;
    throw ValidationError(path + ": " + what);
  }
}

BeamOrientation parse_orientation(Section s) {
  BeamOrientation b{s.angle("pitch"), s.angle("yaw")};
  s.finish();
  return b;
}

EnvironmentParams parse_environment(Section s) {
  EnvironmentParams e;
  e.temperature_c = s.number("temperature_c", e.temperature_c);
  e.salinity_ppt = s.number("salinity_ppt", e.salinity_ppt);
  e.depth_m = s.number("depth_m", e.depth_m);
  e.max_depth_m = s.number("max_depth_m", e.max_depth_m);
  e.ph = s.number("ph", e.ph);
  e.wind_knots = s.number("wind_knots", e.wind_knots);
  e.shipping_density = s.number("shipping_density", e.shipping_density);
  e.particle_density_db = s.number("particle_density_db", e.particle_density_db);
  e.bottom_type = s.number("bottom_type", e.bottom_type);
  s.finish();
  rethrow_with(s.path(), [&] { e.validate(); });
  return e;
}

void parse_sonar(Section s, const EnvironmentParams& env, Scenario& out) {
  SonarConfig& c = out.sonar;
  c.frequency_khz = s.number("frequency_khz", c.frequency_khz);
  const double lambda = sound_speed(env) / (c.frequency_khz * 1000.0);
  c.bandwidth_hz = s.number("bandwidth_hz", c.bandwidth_hz);
  c.source_level_db = s.number("source_level_db", c.source_level_db);
  c.ping_rate_hz = s.number("ping_rate_hz", c.ping_rate_hz);
  c.horizontal_len_m = s.length("horizontal_len", lambda, c.horizontal_len_m);
  c.vertical_len_m = s.length("vertical_len", lambda, c.vertical_len_m);
  c.bin_length_m = s.number("bin_length_m", c.bin_length_m);
  c.num_rays = s.count("num_rays", c.num_rays);
  if (s.has("transmitter")) out.transmitter = parse_orientation(s.child("transmitter"));
  if (s.has("beams")) {
    const YAML::Node beams = s.take("beams");
    const std::string path = s.at("beams");
    if (!beams.IsSequence() || beams.size() == 0) {
      throw ValidationError(path + ": expected a non-empty list of beams");
    }
    c.beams.clear();
    for (std::size_t i = 0; i < beams.size(); ++i) {
      c.beams.push_back(parse_orientation(Section(beams[i], indexed(path, i))));
    }
  }
  s.finish();
  rethrow_with(s.path(), [&] { c.validate(); });
}

SonarPose parse_pose(Section s) {
  SonarPose p;
  p.altitude_m = s.number("altitude_m", p.altitude_m);
  p.depth_m = s.number("depth_m", p.depth_m);
  p.pitch_rad = s.angle("pitch");
  s.finish();
  rethrow_with(s.path(), [&] { p.validate(); });
  return p;
}

ObjectMaterial parse_material(Section& s) {
  ObjectMaterial m;
  m.rms_roughness = s.number("roughness", m.rms_roughness);
  rethrow_with(s.path(), [&] { m.validate(); });
  return m;
}

Heightfield parse_heightfield(Section& s) {
  std::vector<double> xs = to_doubles(s.require("xs"), s.at("xs"));
  std::vector<double> ys = to_doubles(s.require("ys"), s.at("ys"));
  const YAML::Node rows = s.require("depths");
  const std::string path = s.at("depths");
  if (!rows.IsSequence() || rows.size() != ys.size()) {
    throw ValidationError(path + ": expected one row per ys value (" + std::to_string(ys.size()) +
                          ")");
  }
  std::vector<double> depths;
  for (std::size_t j = 0; j < rows.size(); ++j) {
    const std::vector<double> row = to_doubles(rows[j], indexed(path, j));
    if (row.size() != xs.size()) {
      throw ValidationError(indexed(path, j) + ": expected one value per xs value (" +
                            std::to_string(xs.size()) + ")");
    }
    depths.insert(depths.end(), row.begin(), row.end());
  }
  return rethrow_with(s.path(), [&] {
    return Heightfield(std::move(xs), std::move(ys), std::move(depths));
  });
}

Scene parse_scene(Section s, const SonarPose& pose) {
  Scene scene;
  scene.surface = s.flag("surface", true);
  if (s.has("bottom")) {
    Section b = s.child("bottom");
    const std::string type = b.text("type", "flat");
    if (type == "none") {
      scene.bottom = std::monostate{};
    } else if (type == "flat") {
      scene.bottom = FlatBottom{b.number("depth_m", pose.depth_m + pose.altitude_m)};
    } else if (type == "heightfield") {
      scene.bottom = parse_heightfield(b);
    } else {
      throw ValidationError(b.at("type") + ": expected none, flat or heightfield, got '" + type +
                            "'");
    }
    b.finish();
  } else {
    scene.bottom = FlatBottom{pose.depth_m + pose.altitude_m};
  }
  if (s.has("objects")) {
    Section objects = s.child("objects");
    if (objects.has("boxes")) {
      const YAML::Node list = objects.take("boxes");
      const std::string path = objects.at("boxes");
      if (!list.IsSequence()) throw ValidationError(path + ": expected a list");
      for (std::size_t i = 0; i < list.size(); ++i) {
        Section box(list[i], indexed(path, i));
        Box b;
        b.min = to_vec3(box.require("min"), box.at("min"));
        b.max = to_vec3(box.require("max"), box.at("max"));
        b.material = parse_material(box);
        box.finish();
        scene.boxes.push_back(b);
      }
    }
    if (objects.has("meshes")) {
      const YAML::Node list = objects.take("meshes");
      const std::string path = objects.at("meshes");
      if (!list.IsSequence()) throw ValidationError(path + ": expected a list");
      for (std::size_t i = 0; i < list.size(); ++i) {
        Section mesh(list[i], indexed(path, i));
        TriangleMesh m;
        const YAML::Node verts = mesh.require("vertices");
        if (!verts.IsSequence()) throw ValidationError(mesh.at("vertices") + ": expected a list");
        for (std::size_t k = 0; k < verts.size(); ++k) {
          m.vertices.push_back(to_vec3(verts[k], indexed(mesh.at("vertices"), k)));
        }
        const YAML::Node tris = mesh.require("triangles");
        if (!tris.IsSequence()) throw ValidationError(mesh.at("triangles") + ": expected a list");
        for (std::size_t k = 0; k < tris.size(); ++k) {
          const std::string tp = indexed(mesh.at("triangles"), k);
          if (!tris[k].IsSequence() || tris[k].size() != 3) {
            throw ValidationError(tp + ": expected [i, j, k]");
          }
          std::array<std::uint32_t, 3> t{};
          for (std::size_t q = 0; q < 3; ++q) {
            const std::uint64_t idx = to_count(tris[k][q], indexed(tp, q));
            if (idx > 0xffffffffu) throw ValidationError(indexed(tp, q) + ": index too large");
            t[q] = static_cast<std::uint32_t>(idx);
          }
          m.triangles.push_back(t);
        }
        m.material = parse_material(mesh);
        mesh.finish();
        scene.meshes.push_back(std::move(m));
      }
    }
    objects.finish();
  }
  s.finish();
  rethrow_with(s.path(), [&] { scene.validate(); });
  return scene;
}

void parse_run(Section s, Scenario& out) {
  out.run.num_pings = s.count("num_pings", out.run.num_pings);
  out.sonar.rng_seed = s.count("seed", out.sonar.rng_seed);
  out.run.noise = s.flag("noise", out.run.noise);
  out.run.output_dir = s.text("output_dir", out.run.output_dir);
  s.finish();
}

SimOptions parse_sim(Section s) {
  SimOptions o;
  const std::string sampling = s.text("sampling", "sphere");
  if (sampling == "sphere") {
    o.sampling = RaySampling::kSphere;
  } else if (sampling == "hemisphere") {
    o.sampling = RaySampling::kHemisphere;
  } else {
    throw ValidationError(s.at("sampling") + ": expected sphere or hemisphere, got '" + sampling +
                          "'");
  }
  o.volume = s.flag("volume", o.volume);
  o.multipath = s.flag("multipath", o.multipath);
  const std::uint64_t threads = s.count("threads", 0);
  if (threads > 4096) throw ValidationError(s.at("threads") + ": must be <= 4096");
  o.threads = static_cast<unsigned>(threads);
  s.finish();
  return o;
}

NullModelOptions parse_null(Section s) {
  NullModelOptions o;
  const std::string averaging = s.text("averaging", "linear");
  if (averaging == "linear") {
    o.averaging = BeamAveraging::kLinear;
  } else if (averaging == "printed_db") {
    o.averaging = BeamAveraging::kPrintedDb;
  } else {
    throw ValidationError(s.at("averaging") + ": expected linear or printed_db, got '" +
                          averaging + "'");
  }
  o.bottom = s.flag("bottom", o.bottom);
  o.surface = s.flag("surface", o.surface);
  o.volume = s.flag("volume", o.volume);
  o.quadrature_tol_db = s.number("quadrature_tol_db", o.quadrature_tol_db);
  o.max_panels = s.count("max_panels", o.max_panels);
  s.finish();
  return o;
}

CompareCriteria parse_compare(Section s) {
  CompareCriteria c;
  c.window_min_m = s.number("window_min_m", c.window_min_m);
  c.window_max_m = s.number("window_max_m", c.window_max_m);
  c.max_gap_db = s.number("max_gap_db", c.max_gap_db);
  c.floor_db = s.number("floor_db", c.floor_db);
  s.finish();
  return c;
}

DetectSettings parse_detect(Section s) {
  DetectSettings d;
  d.gamma = s.number("gamma", d.gamma);
  d.sigma_db = s.number("sigma_db", d.sigma_db);
  d.alt_offset_db = s.number("alt_offset_db", d.alt_offset_db);
  s.finish();
  return d;
}

Scenario parse_root(const YAML::Node& root) {
  if (!root || root.IsNull()) throw ValidationError("document: empty scenario");
  Section top(root, "");
  Scenario sc;
  sc.env = parse_environment(top.child("environment"));
  parse_sonar(top.child("sonar"), sc.env, sc);
  sc.pose = parse_pose(top.child("pose"));
  sc.scene = top.has("scene") ? parse_scene(top.child("scene"), sc.pose)
                              : Scene{true, FlatBottom{sc.pose.depth_m + sc.pose.altitude_m}, {}, {}};
  if (top.has("run")) parse_run(top.child("run"), sc);
  if (top.has("sim")) sc.sim = parse_sim(top.child("sim"));
  if (top.has("null_model")) sc.null_model = parse_null(top.child("null_model"));
  if (top.has("compare")) sc.compare = parse_compare(top.child("compare"));
  if (top.has("detect")) sc.detect = parse_detect(top.child("detect"));
  top.finish();
  sc.sim.noise = sc.run.noise;
  sc.validate();
  return sc;
}

bool close(double a, double b) { return std::abs(a - b) <= 1e-9 * std::max(1.0, std::abs(b)); }

void emit_vec3(YAML::Emitter& e, const Vec3& v) {
  e << YAML::Flow << YAML::BeginSeq << v.x << v.y << v.z << YAML::EndSeq;
}

void emit_orientation(YAML::Emitter& e, const BeamOrientation& b) {
  e << YAML::Flow << YAML::BeginMap << YAML::Key << "pitch_rad" << YAML::Value << b.pitch_rad
    << YAML::Key << "yaw_rad" << YAML::Value << b.yaw_rad << YAML::EndMap;
}

}  // namespace

void Scenario::validate() const {
  rethrow_with("environment", [&] { env.validate(); });
  rethrow_with("sonar", [&] { sonar.validate(); });
  if (!(std::isfinite(transmitter.pitch_rad) && std::isfinite(transmitter.yaw_rad))) {
    throw ValidationError("sonar.transmitter: angles must be finite");
  }
  rethrow_with("pose", [&] { pose.validate(); });
  rethrow_with("scene", [&] { scene.validate(); });
  if (run.num_pings < 1) throw ValidationError("run.num_pings: must be >= 1");
  if (sonar.num_rays < 1) throw ValidationError("sonar.num_rays: must be >= 1");
  if (sim.noise != run.noise) throw ValidationError("sim.noise must mirror run.noise");

  const double expected = pose.depth_m + pose.altitude_m;
  if (const auto* flat = std::get_if<FlatBottom>(&scene.bottom)) {
    if (!close(flat->depth_m, expected)) {
      throw ValidationError("scene.bottom.depth_m: must equal pose.depth_m + pose.altitude_m (" +
                            std::to_string(expected) + ")");
    }
  } else if (const auto* hf = std::get_if<Heightfield>(&scene.bottom)) {
    if (!close(hf->depth_at(0.0, 0.0), expected)) {
      throw ValidationError(
          "scene.bottom.depths: depth below the sonar must equal pose.depth_m + "
          "pose.altitude_m (" +
          std::to_string(expected) + ")");
    }
  }
  const Vec3 origin{0.0, 0.0, pose.depth_m};
  for (std::size_t k = 0; k < scene.boxes.size(); ++k) {
    const Box& b = scene.boxes[k];
    if (origin.x >= b.min.x && origin.x <= b.max.x && origin.y >= b.min.y &&
        origin.y <= b.max.y && origin.z >= b.min.z && origin.z <= b.max.z) {
      throw ValidationError("scene.objects.boxes[" + std::to_string(k) +
                            "]: contains the sonar");
    }
  }

  if (!(null_model.quadrature_tol_db > 0.0)) {
    throw ValidationError("null_model.quadrature_tol_db: must be > 0");
  }
  if (null_model.max_panels < 64) throw ValidationError("null_model.max_panels: must be >= 64");
  if (!(compare.window_max_m >= compare.window_min_m)) {
    throw ValidationError("compare.window_max_m: must be >= window_min_m");
  }
  if (!(compare.max_gap_db > 0.0)) throw ValidationError("compare.max_gap_db: must be > 0");
  if (std::isnan(detect.gamma)) throw ValidationError("detect.gamma: must not be NaN");
  rethrow_with("detect", [&] { (void)GaussianDbModel(detect.sigma_db, detect.alt_offset_db); });
}

Scenario parse_scenario(const std::string& text) {
  YAML::Node root;
  try {
    root = YAML::Load(text);
  } catch (const YAML::Exception& e) {
    throw ValidationError(std::string("document: parse error: ") + e.what());
  }
  return parse_root(root);
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open scenario file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str());
}

std::string serialize_scenario(const Scenario& sc) {
  YAML::Emitter e;
  e.SetDoublePrecision(17);
  e << YAML::BeginMap;

  const EnvironmentParams& env = sc.env;
  e << YAML::Key << "environment" << YAML::Value << YAML::BeginMap;
  e << YAML::Key << "temperature_c" << YAML::Value << env.temperature_c;
  e << YAML::Key << "salinity_ppt" << YAML::Value << env.salinity_ppt;
  e << YAML::Key << "depth_m" << YAML::Value << env.depth_m;
  e << YAML::Key << "max_depth_m" << YAML::Value << env.max_depth_m;
  e << YAML::Key << "ph" << YAML::Value << env.ph;
  e << YAML::Key << "wind_knots" << YAML::Value << env.wind_knots;
  e << YAML::Key << "shipping_density" << YAML::Value << env.shipping_density;
  e << YAML::Key << "particle_density_db" << YAML::Value << env.particle_density_db;
  e << YAML::Key << "bottom_type" << YAML::Value << env.bottom_type;
  e << YAML::EndMap;

  const SonarConfig& s = sc.sonar;
  e << YAML::Key << "sonar" << YAML::Value << YAML::BeginMap;
  e << YAML::Key << "frequency_khz" << YAML::Value << s.frequency_khz;
  e << YAML::Key << "bandwidth_hz" << YAML::Value << s.bandwidth_hz;
  e << YAML::Key << "source_level_db" << YAML::Value << s.source_level_db;
  e << YAML::Key << "ping_rate_hz" << YAML::Value << s.ping_rate_hz;
  e << YAML::Key << "horizontal_len_m" << YAML::Value << s.horizontal_len_m;
  e << YAML::Key << "vertical_len_m" << YAML::Value << s.vertical_len_m;
  e << YAML::Key << "bin_length_m" << YAML::Value << s.bin_length_m;
  e << YAML::Key << "num_rays" << YAML::Value << s.num_rays;
  e << YAML::Key << "transmitter" << YAML::Value;
  emit_orientation(e, sc.transmitter);
  e << YAML::Key << "beams" << YAML::Value << YAML::BeginSeq;
  for (const auto& b : s.beams) emit_orientation(e, b);
  e << YAML::EndSeq << YAML::EndMap;

  e << YAML::Key << "pose" << YAML::Value << YAML::BeginMap;
  e << YAML::Key << "altitude_m" << YAML::Value << sc.pose.altitude_m;
  e << YAML::Key << "depth_m" << YAML::Value << sc.pose.depth_m;
  e << YAML::Key << "pitch_rad" << YAML::Value << sc.pose.pitch_rad;
  e << YAML::EndMap;

  e << YAML::Key << "scene" << YAML::Value << YAML::BeginMap;
  e << YAML::Key << "surface" << YAML::Value << sc.scene.surface;
  e << YAML::Key << "bottom" << YAML::Value << YAML::BeginMap;
  if (std::holds_alternative<std::monostate>(sc.scene.bottom)) {
    e << YAML::Key << "type" << YAML::Value << "none";
  } else if (const auto* flat = std::get_if<FlatBottom>(&sc.scene.bottom)) {
    e << YAML::Key << "type" << YAML::Value << "flat";
    e << YAML::Key << "depth_m" << YAML::Value << flat->depth_m;
  } else {
    const auto& hf = std::get<Heightfield>(sc.scene.bottom);
    e << YAML::Key << "type" << YAML::Value << "heightfield";
    e << YAML::Key << "xs" << YAML::Value << YAML::Flow << hf.xs();
    e << YAML::Key << "ys" << YAML::Value << YAML::Flow << hf.ys();
    e << YAML::Key << "depths" << YAML::Value << YAML::BeginSeq;
    const std::size_t nx = hf.xs().size();
    for (std::size_t j = 0; j < hf.ys().size(); ++j) {
      const std::vector<double> row(hf.depths().begin() + static_cast<std::ptrdiff_t>(j * nx),
                                    hf.depths().begin() + static_cast<std::ptrdiff_t>((j + 1) * nx));
      e << YAML::Flow << row;
    }
    e << YAML::EndSeq;
  }
  e << YAML::EndMap;
  e << YAML::Key << "objects" << YAML::Value << YAML::BeginMap;
  e << YAML::Key << "boxes" << YAML::Value << YAML::BeginSeq;
  for (const Box& b : sc.scene.boxes) {
    e << YAML::BeginMap << YAML::Key << "min" << YAML::Value;
    emit_vec3(e, b.min);
    e << YAML::Key << "max" << YAML::Value;
    emit_vec3(e, b.max);
    e << YAML::Key << "roughness" << YAML::Value << b.material.rms_roughness << YAML::EndMap;
  }
  e << YAML::EndSeq;
  e << YAML::Key << "meshes" << YAML::Value << YAML::BeginSeq;
  for (const TriangleMesh& m : sc.scene.meshes) {
    e << YAML::BeginMap << YAML::Key << "vertices" << YAML::Value << YAML::BeginSeq;
    for (const Vec3& v : m.vertices) emit_vec3(e, v);
    e << YAML::EndSeq << YAML::Key << "triangles" << YAML::Value << YAML::BeginSeq;
    for (const auto& t : m.triangles) {
      e << YAML::Flow << YAML::BeginSeq << t[0] << t[1] << t[2] << YAML::EndSeq;
    }
    e << YAML::EndSeq;
    e << YAML::Key << "roughness" << YAML::Value << m.material.rms_roughness << YAML::EndMap;
  }
  e << YAML::EndSeq << YAML::EndMap << YAML::EndMap;

  e << YAML::Key << "run" << YAML::Value << YAML::BeginMap;
  e << YAML::Key << "num_pings" << YAML::Value << sc.run.num_pings;
  e << YAML::Key << "seed" << YAML::Value << sc.sonar.rng_seed;
  e << YAML::Key << "noise" << YAML::Value << sc.run.noise;
  if (!sc.run.output_dir.empty()) {
    e << YAML::Key << "output_dir" << YAML::Value << YAML::DoubleQuoted << sc.run.output_dir;
  }
  e << YAML::EndMap;

  e << YAML::Key << "sim" << YAML::Value << YAML::BeginMap;
  e << YAML::Key << "sampling" << YAML::Value
    << (sc.sim.sampling == RaySampling::kSphere ? "sphere" : "hemisphere");
  e << YAML::Key << "volume" << YAML::Value << sc.sim.volume;
  e << YAML::Key << "multipath" << YAML::Value << sc.sim.multipath;
  e << YAML::Key << "threads" << YAML::Value << sc.sim.threads;
  e << YAML::EndMap;

  e << YAML::Key << "null_model" << YAML::Value << YAML::BeginMap;
  e << YAML::Key << "averaging" << YAML::Value
    << (sc.null_model.averaging == BeamAveraging::kLinear ? "linear" : "printed_db");
  e << YAML::Key << "bottom" << YAML::Value << sc.null_model.bottom;
  e << YAML::Key << "surface" << YAML::Value << sc.null_model.surface;
  e << YAML::Key << "volume" << YAML::Value << sc.null_model.volume;
  e << YAML::Key << "quadrature_tol_db" << YAML::Value << sc.null_model.quadrature_tol_db;
  e << YAML::Key << "max_panels" << YAML::Value
    << static_cast<std::uint64_t>(sc.null_model.max_panels);
  e << YAML::EndMap;

  e << YAML::Key << "compare" << YAML::Value << YAML::BeginMap;
  e << YAML::Key << "window_min_m" << YAML::Value << sc.compare.window_min_m;
  e << YAML::Key << "window_max_m" << YAML::Value << sc.compare.window_max_m;
  e << YAML::Key << "max_gap_db" << YAML::Value << sc.compare.max_gap_db;
  e << YAML::Key << "floor_db" << YAML::Value << sc.compare.floor_db;
  e << YAML::EndMap;

  e << YAML::Key << "detect" << YAML::Value << YAML::BeginMap;
  e << YAML::Key << "gamma" << YAML::Value << sc.detect.gamma;
  e << YAML::Key << "sigma_db" << YAML::Value << sc.detect.sigma_db;
  e << YAML::Key << "alt_offset_db" << YAML::Value << sc.detect.alt_offset_db;
  e << YAML::EndMap;

  e << YAML::EndMap;
  return std::string(e.c_str()) + "\n";
}

void apply_overrides(Scenario& sc, const RunOverrides& o) {
  if (o.seed) sc.sonar.rng_seed = *o.seed;
  if (o.rays) sc.sonar.num_rays = *o.rays;
  if (o.pings) sc.run.num_pings = *o.pings;
  if (o.gamma) sc.detect.gamma = *o.gamma;
  if (o.no_noise) sc.run.noise = false;
  sc.sim.noise = sc.run.noise;
  sc.validate();
}

}  // namespace flsim
