#include "flsim/runs.hpp"

#include <fmt/format.h>

#include <cmath>
#include <fstream>

#include "flsim/errors.hpp"

namespace flsim {

namespace fs = std::filesystem;

namespace {

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ValidationError("cannot write " + path.string());
  out << content;
  if (!out) throw ValidationError("failed writing " + path.string());
}

void prepare(const fs::path& out_dir, const std::string& command, const Scenario& sc) {
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) throw ValidationError("cannot create output directory " + out_dir.string());
  std::string meta = "command: " + command + "\nscenario:\n";
  const std::string body = serialize_scenario(sc);
  std::size_t start = 0;
  while (start < body.size()) {
    const std::size_t end = body.find('\n', start);
    const std::string line = body.substr(start, end - start);
    if (!line.empty()) meta += "  " + line + "\n";
    if (end == std::string::npos) break;
    start = end + 1;
  }
  write_file(out_dir / "run.yaml", meta);
}

std::string format_lambda(double v) { return fmt::format("{:.9e}", v); }

std::string ping_table(const PingReturn& p) {
  std::string s =
      "beam_id,bin,d_center_m,intensity_db,bottom_db,surface_db,object_db,volume_db,"
      "multipath_db\n";
  for (std::size_t b = 0; b < p.beams.size(); ++b) {
    const BeamReturn& br = p.beams[b];
    for (std::size_t i = 0; i < br.total.size(); ++i) {
      s += fmt::format("{},{},{:.4f},{},{},{},{},{},{}\n", b, i + 1,
                       bin_center(i + 1, p.layout), format_db(Level::from_linear(br.total[i])),
                       format_db(Level::from_linear(br.bottom[i])),
                       format_db(Level::from_linear(br.surface[i])),
                       format_db(Level::from_linear(br.object[i])),
                       format_db(Level::from_linear(br.volume[i])),
                       format_db(Level::from_linear(br.multipath[i])));
    }
  }
  return s;
}

std::string mean_table(const std::vector<std::vector<double>>& mean, const BinLayout& layout) {
  std::string s = "beam_id,bin,d_center_m,mean_intensity_db\n";
  for (std::size_t b = 0; b < mean.size(); ++b) {
    for (std::size_t i = 0; i < mean[b].size(); ++i) {
      s += fmt::format("{},{},{:.4f},{}\n", b, i + 1, bin_center(i + 1, layout),
                       format_db(Level::from_linear(mean[b][i])));
    }
  }
  return s;
}

std::string ping_name(const char* prefix, std::size_t k) {
  return fmt::format("{}{:04d}.csv", prefix, k);
}

}  // namespace

std::string format_db(Level level) {
  return level.is_none() ? std::string("null") : fmt::format("{:.6f}", level.value_db());
}

std::vector<BeamPair> beam_pairs(const Scenario& sc) {
  const BeamOrientation tx = effective_orientation(sc.transmitter, sc.pose);
  std::vector<BeamPair> out;
  out.reserve(sc.sonar.beams.size());
  for (const auto& b : sc.sonar.beams) out.push_back({tx, effective_orientation(b, sc.pose)});
  return out;
}

std::vector<NullModelReturn> compute_nulls(const Scenario& sc) {
  const BinLayout layout = layout_for(sc.env, sc.sonar);
  std::vector<NullModelReturn> out;
  for (const BeamPair& pair : beam_pairs(sc)) {
    out.push_back(expected_null(sc.env, sc.sonar, sc.pose, pair, layout, sc.null_model));
  }
  return out;
}

std::vector<PingReturn> simulate(const Scenario& sc) {
  SimOptions opts = sc.sim;
  opts.noise = sc.run.noise;
  std::vector<PingReturn> out;
  out.reserve(sc.run.num_pings);
  for (std::uint64_t k = 0; k < sc.run.num_pings; ++k) {
    out.push_back(ping(sc.scene, sc.env, sc.sonar, sc.pose, sc.transmitter, k, opts));
  }
  return out;
}

std::vector<std::vector<double>> mean_total(const std::vector<PingReturn>& pings) {
  if (pings.empty()) return {};
  std::vector<std::vector<double>> mean;
  for (const BeamReturn& br : pings.front().beams) mean.emplace_back(br.total.size(), 0.0);
  for (const PingReturn& p : pings) {
    for (std::size_t b = 0; b < mean.size(); ++b) {
      for (std::size_t i = 0; i < mean[b].size(); ++i) mean[b][i] += p.beams[b].total[i];
    }
  }
  const double scale = 1.0 / static_cast<double>(pings.size());
  for (auto& row : mean) {
    for (double& v : row) v *= scale;
  }
  return mean;
}

CompareOutcome compare_tables(const std::vector<NullModelReturn>& nulls,
                              const std::vector<std::vector<double>>& sim_mean,
                              const CompareCriteria& c) {
  if (nulls.size() != sim_mean.size()) {
    throw ValidationError("compare: beam count differs between null model and simulation");
  }
  CompareOutcome out;
  for (std::size_t b = 0; b < nulls.size(); ++b) {
    const NullModelReturn& null = nulls[b];
    if (null.bins.size() != sim_mean[b].size()) {
      throw ValidationError("compare: bin count differs for beam " + std::to_string(b));
    }
    for (std::size_t i = 0; i < null.bins.size(); ++i) {
      CompareRow r;
      r.beam = b;
      r.bin = i + 1;
      r.center_m = null.bins[i].center_m;
      r.expected = null.bins[i].total;
      r.simulated = Level::from_linear(sim_mean[b][i]);
      if (r.expected.has_value() && r.simulated.has_value()) {
        r.gap_db = r.simulated.value_db() - r.expected.value_db();
      }
      r.in_window = r.center_m >= c.window_min_m && r.center_m <= c.window_max_m &&
                    r.expected.has_value() && r.expected.value_db() >= c.floor_db;
      if (r.in_window) {
        ++out.checked;
        r.passed = r.gap_db && std::abs(*r.gap_db) <= c.max_gap_db;
        if (!r.passed) ++out.failed;
      }
      out.rows.push_back(r);
    }
  }
  out.passed = out.failed == 0;
  return out;
}

void run_null(const Scenario& sc, const fs::path& out_dir) {
  prepare(out_dir, "null", sc);
  const std::vector<NullModelReturn> nulls = compute_nulls(sc);
  for (std::size_t b = 0; b < nulls.size(); ++b) {
    std::string s = "bin,d_center_m,total_db,bottom_db,surface_db,volume_db\n";
    for (const NullBin& n : nulls[b].bins) {
      s += fmt::format("{},{:.4f},{},{},{},{}\n", n.bin, n.center_m, format_db(n.total),
                       format_db(n.bottom), format_db(n.surface), format_db(n.volume));
    }
    write_file(out_dir / fmt::format("null_beam{}.csv", b), s);
  }
}

void run_sim(const Scenario& sc, const fs::path& out_dir) {
  prepare(out_dir, "sim", sc);
  const std::vector<PingReturn> pings = simulate(sc);
  for (std::size_t k = 0; k < pings.size(); ++k) {
    write_file(out_dir / ping_name("ping_", k), ping_table(pings[k]));
  }
  write_file(out_dir / "sim_mean.csv", mean_table(mean_total(pings), pings.front().layout));
}

CompareOutcome run_compare(const Scenario& sc, const fs::path& out_dir) {
  prepare(out_dir, "compare", sc);
  const std::vector<NullModelReturn> nulls = compute_nulls(sc);
  const std::vector<PingReturn> pings = simulate(sc);
  const auto mean = mean_total(pings);
  write_file(out_dir / "sim_mean.csv", mean_table(mean, pings.front().layout));
  CompareOutcome outcome = compare_tables(nulls, mean, sc.compare);
  std::string s = "beam,bin,d_center,expected_db,sim_mean_db,gap_db,in_window\n";
  for (const CompareRow& r : outcome.rows) {
    s += fmt::format("{},{},{:.4f},{},{},{},{}\n", r.beam, r.bin, r.center_m,
                     format_db(r.expected), format_db(r.simulated),
                     r.gap_db ? fmt::format("{:.6f}", *r.gap_db) : std::string("null"),
                     r.in_window ? 1 : 0);
  }
  write_file(out_dir / "compare.csv", s);
  return outcome;
}

void run_detect(const Scenario& sc, const fs::path& out_dir) {
  prepare(out_dir, "detect", sc);
  const GaussianDbModel model(sc.detect.sigma_db, sc.detect.alt_offset_db);
  const std::vector<NullModelReturn> nulls = compute_nulls(sc);
  const std::vector<PingReturn> pings = simulate(sc);
  PdPfa summary{};
  for (std::size_t k = 0; k < pings.size(); ++k) {
    const DetectionResult r = detect_ping(pings[k], nulls, sc.detect.gamma, model);
    summary = r.summary;
    std::string s = "beam,bin,z_db,lambda,decision\n";
    for (const BinDecision& d : r.bins) {
      s += fmt::format("{},{},{},{},{}\n", d.beam, d.bin, format_db(d.z),
                       d.excluded ? std::string("null") : format_lambda(d.lambda),
                       d.excluded ? std::string("excluded") : std::to_string(d.decision));
    }
    write_file(out_dir / ping_name("detect_ping_", k), s);
  }
  write_file(out_dir / "detect_summary.csv",
             fmt::format("gamma,pd,pfa\n{:.9g},{:.9e},{:.9e}\n", sc.detect.gamma, summary.pd,
                         summary.pfa));
}

}  // namespace flsim
