#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "flsim/errors.hpp"
#include "flsim/runs.hpp"

using namespace flsim;
namespace fs = std::filesystem;

namespace {

const std::string kScenarioDir = FLSIM_SCENARIO_DIR;

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("flsim_runs_" + name);
  fs::remove_all(p);
  return p;
}

}  // namespace

TEST(FormatDb, Tokens) {
  EXPECT_EQ(format_db(Level::none()), "null");
  EXPECT_EQ(format_db(Level::db(-93.2012574)), "-93.201257");
  EXPECT_EQ(format_db(Level::db(0)), "0.000000");
}

TEST(Compare, IdenticalTablesHaveZeroGaps) {
  const Scenario sc = load_scenario(kScenarioDir + "/scenario1.yaml");
  const auto nulls = compute_nulls(sc);
  std::vector<std::vector<double>> mean(1);
  for (const NullBin& b : nulls[0].bins) mean[0].push_back(b.total.linear());
  const CompareOutcome r = compare_tables(nulls, mean, sc.compare);
  EXPECT_TRUE(r.passed);
  EXPECT_GT(r.checked, 0u);
  for (const CompareRow& row : r.rows) {
    if (row.gap_db) EXPECT_NEAR(*row.gap_db, 0.0, 1e-9);
  }
}

TEST(Compare, WindowAndFloorSelectBins) {
  const Scenario sc = load_scenario(kScenarioDir + "/scenario1.yaml");
  const auto nulls = compute_nulls(sc);
  std::vector<std::vector<double>> mean(1);
  for (const NullBin& b : nulls[0].bins) mean[0].push_back(b.total.linear());
  const CompareOutcome r = compare_tables(nulls, mean, sc.compare);
  std::size_t in = 0;
  for (const CompareRow& row : r.rows) {
    const bool expect = row.center_m <= 20.0 && row.expected.has_value() &&
                        row.expected.value_db() >= -120.0;
    EXPECT_EQ(row.in_window, expect) << row.bin;
    in += row.in_window;
  }
  EXPECT_EQ(in, r.checked);
  EXPECT_EQ(r.checked, 80u);
}

TEST(Compare, TooFewRaysFails) {
  Scenario sc = load_scenario(kScenarioDir + "/scenario1.yaml");
  sc.sonar.num_rays = 50;
  sc.run.num_pings = 5;
  const CompareOutcome r = compare_tables(compute_nulls(sc), mean_total(simulate(sc)), sc.compare);
  EXPECT_FALSE(r.passed);
  EXPECT_GT(r.failed, 0u);
}

TEST(Compare, ShapeMismatchRejected) {
  const Scenario sc = load_scenario(kScenarioDir + "/scenario1.yaml");
  EXPECT_THROW((void)compare_tables(compute_nulls(sc), {}, sc.compare), ValidationError);
}

TEST(Runs, NullTablesAndMetadata) {
  const Scenario sc = load_scenario(kScenarioDir + "/scenario2.yaml");
  const fs::path out = scratch("null");
  run_null(sc, out);
  for (int b = 0; b < 3; ++b) {
    const std::string t = slurp(out / ("null_beam" + std::to_string(b) + ".csv"));
    EXPECT_EQ(t.rfind("bin,d_center_m,total_db,bottom_db,surface_db,volume_db\n", 0), 0u);
    EXPECT_EQ(std::count(t.begin(), t.end(), '\n'), 200);
    EXPECT_NE(t.find("\n1,0.1250,"), std::string::npos);
  }
  const std::string meta = slurp(out / "run.yaml");
  ASSERT_EQ(meta.rfind("command: null\nscenario:\n", 0), 0u);
  // The indented body is the resolved scenario.
  std::string body;
  std::istringstream lines(meta.substr(meta.find("scenario:\n") + 10));
  for (std::string line; std::getline(lines, line);) body += line.substr(2) + "\n";
  EXPECT_EQ(parse_scenario(body), sc);
  fs::remove_all(out);
}

TEST(Runs, SimWritesPingsAndMean) {
  Scenario sc = load_scenario(kScenarioDir + "/scenario1.yaml");
  sc.run.num_pings = 2;
  sc.sonar.num_rays = 2000;
  const fs::path out = scratch("sim");
  run_sim(sc, out);
  const std::string p0 = slurp(out / "ping_0000.csv");
  EXPECT_EQ(p0.rfind("beam_id,bin,d_center_m,intensity_db,bottom_db,surface_db,object_db,"
                     "volume_db,multipath_db\n",
                     0),
            0u);
  EXPECT_TRUE(fs::exists(out / "ping_0001.csv"));
  EXPECT_FALSE(fs::exists(out / "ping_0002.csv"));
  EXPECT_EQ(slurp(out / "sim_mean.csv").rfind("beam_id,bin,d_center_m,mean_intensity_db\n", 0),
            0u);
  fs::remove_all(out);
}

TEST(Runs, DetectFindsTheRiseInScenarioTwo) {
  Scenario sc = load_scenario(kScenarioDir + "/scenario2.yaml");
  sc.run.num_pings = 1;
  const auto nulls = compute_nulls(sc);
  const auto pings = simulate(sc);
  const GaussianDbModel model(sc.detect.sigma_db, sc.detect.alt_offset_db);
  const DetectionResult r = detect_ping(pings[0], nulls, sc.detect.gamma, model);
  const std::size_t rise = pings[0].layout.bin_index(35.0);
  std::size_t fired_near = 0;
  for (const BinDecision& d : r.bins) {
    if (d.beam == 0 && d.bin == rise) EXPECT_EQ(d.decision, 1);
    // Bins in the near field, clear of the bottom and surface onsets.
    if (d.beam == 0 && d.bin >= 4 && d.bin <= 18 && d.decision == 1) ++fired_near;
  }
  EXPECT_EQ(fired_near, 0u);

  const fs::path out = scratch("detect");
  sc.run.num_pings = 1;
  run_detect(sc, out);
  const std::string t = slurp(out / "detect_ping_0000.csv");
  EXPECT_EQ(t.rfind("beam,bin,z_db,lambda,decision\n", 0), 0u);
  const std::string summary = slurp(out / "detect_summary.csv");
  EXPECT_EQ(summary.rfind("gamma,pd,pfa\n10,", 0), 0u) << summary;
  fs::remove_all(out);
}
