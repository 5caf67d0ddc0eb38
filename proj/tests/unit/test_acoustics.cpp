#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "flsim/acoustics.hpp"
#include "flsim/errors.hpp"
#include "oracle_values.hpp"

using namespace flsim;
namespace oracle = flsim::oracle;

namespace {

EnvironmentParams env_at(double t, double s, double z) {
  EnvironmentParams e;
  e.temperature_c = t;
  e.salinity_ppt = s;
  e.depth_m = z;
  return e;
}

EnvironmentParams scenario_env() {
  EnvironmentParams e;
  e.temperature_c = 10.0;
  e.salinity_ppt = 35.0;
  e.depth_m = 7.0;
  e.max_depth_m = 12.0;
  e.ph = 8.0;
  e.wind_knots = 10.0;
  e.shipping_density = 0.5;
  return e;
}

SonarConfig aperture_in_wavelengths(double h_wl, double v_wl, double c) {
  SonarConfig s;
  const double lambda = s.wavelength_m(c);
  s.horizontal_len_m = h_wl * lambda;
  s.vertical_len_m = v_wl * lambda;
  return s;
}

}  // namespace

TEST(SoundSpeed, Examples) {
  EXPECT_DOUBLE_EQ(sound_speed(env_at(0, 35, 0)), 1449.2);
  EXPECT_DOUBLE_EQ(sound_speed(env_at(0, 35, 100)), 1450.8);
  EXPECT_NEAR(sound_speed(env_at(10, 35, 50)), oracle::kSoundSpeed_10_35_50, 1e-9);
  EXPECT_NEAR(sound_speed(scenario_env()), oracle::kScenarioSoundSpeed, 1e-9);
}

TEST(SoundSpeed, IncreasesWithDepth) {
  for (double z = 0; z < 900; z += 50) {
    EXPECT_LT(sound_speed(env_at(12, 34, z)), sound_speed(env_at(12, 34, z + 1)));
  }
}

TEST(SoundSpeed, RejectsOutOfRange) {
  EXPECT_THROW((void)sound_speed(env_at(-5, 35, 0)), ValidationError);
  EXPECT_THROW((void)sound_speed(env_at(10, 60, 0)), ValidationError);
  try {
    (void)sound_speed(env_at(50, 35, 0));
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("temperature_c"), std::string::npos);
  }
}

TEST(Absorption, MatchesOracle) {
  EnvironmentParams e = env_at(10, 35, 0);
  e.max_depth_m = 100;
  e.ph = 8;
  EXPECT_NEAR(absorption_coeff(100, e, sound_speed(e)), oracle::kAbsorption_100k_T10, 1e-9);

  const EnvironmentParams s = scenario_env();
  EXPECT_NEAR(absorption_coeff(450, s), oracle::kScenarioAlpha, 1e-9);
}

TEST(Absorption, TwentyDegreesUsesLowBranch) {
  EnvironmentParams e = env_at(20, 35, 0);
  e.max_depth_m = 100;
  const double c = sound_speed(e);
  const double a = absorption_coeff(450, e, c);
  EXPECT_NEAR(a, oracle::kAbsorption_450k_T20, 1e-9);

  // The high branch would move the result by far more than the 1e-9 tolerance above.
  const double t = 20.0;
  const double hi = 3.964e-4 - 1.146e-5 * t + 1.45e-7 * t * t - 6.5e-10 * t * t * t;
  const double p3 = 1.0 - 3.83e-5 * 100 + 4.9e-10 * 100 * 100;
  const double shift = (hi - oracle::kA3_T20) * p3 * 450 * 450;
  EXPECT_GT(std::abs(shift), 1e-3);
}

TEST(Absorption, IncreasesWithFrequency) {
  const EnvironmentParams e = scenario_env();
  EXPECT_GT(absorption_coeff(200, e), absorption_coeff(100, e));
  EXPECT_GT(absorption_coeff(100, e), 0.0);
  EXPECT_THROW((void)absorption_coeff(0, e), ValidationError);
}

TEST(Attenuation, Examples) {
  EXPECT_DOUBLE_EQ(attenuation_total(10, 1), 0.01);
  EXPECT_NEAR(attenuation_total(10, 500.5), 10.0, 1e-12);
  EXPECT_DOUBLE_EQ(attenuation_total(0, 37), 0.0);
  EXPECT_DOUBLE_EQ(attenuation_total(10, 0.3), 0.01);
}

TEST(SpreadLoss, Examples) {
  EXPECT_DOUBLE_EQ(spread_loss(1), 0.0);
  EXPECT_DOUBLE_EQ(spread_loss(10), 40.0);
  EXPECT_DOUBLE_EQ(spread_loss(100), 80.0);
  EXPECT_DOUBLE_EQ(spread_loss(0.5), 0.0);
  EXPECT_THROW((void)spread_loss(0), ValidationError);
  EXPECT_THROW((void)spread_loss(-2), ValidationError);
}

TEST(SpreadLoss, Properties) {
  for (double d = 1.5; d < 200; d *= 1.7) {
    EXPECT_LT(spread_loss(d), spread_loss(d * 1.01));
    EXPECT_NEAR(spread_loss(d * d), 2 * spread_loss(d), 1e-10);
  }
}

TEST(TransmissionLoss, Examples) {
  EXPECT_DOUBLE_EQ(transmission_loss(1, 10), 0.01);
  EXPECT_DOUBLE_EQ(transmission_loss(10, 0), 40.0);
  EXPECT_NEAR(transmission_loss(35, oracle::kScenarioAlpha), oracle::kScenarioTl35, 1e-9);
  for (double d = 1; d < 100; d += 7) EXPECT_GE(transmission_loss(d, 5), spread_loss(d));
}

TEST(BeamPattern, OnAxisIsZeroDb) {
  const SonarConfig s = aperture_in_wavelengths(3, 2, 1500);
  EXPECT_DOUBLE_EQ(beam_pattern_loss(0, 0, s, 1500).value_db(), 0.0);
}

TEST(BeamPattern, OutsideFrontHemisphere) {
  const SonarConfig s = aperture_in_wavelengths(3, 2, 1500);
  const double half = std::numbers::pi / 2;
  EXPECT_TRUE(beam_pattern_loss(half + 0.01, 0, s, 1500).is_none());
  EXPECT_TRUE(beam_pattern_loss(0, -half - 0.01, s, 1500).is_none());
  EXPECT_TRUE(beam_pattern_loss(half, 0, s, 1500).is_none());
}

TEST(BeamPattern, FirstNullIsNoResponse) {
  const double c = oracle::kScenarioSoundSpeed;
  const SonarConfig s = aperture_in_wavelengths(3, 2, c);
  EXPECT_TRUE(beam_pattern_loss(oracle::kFirstNullTheta_3wl, 0, s, c).is_none());
  EXPECT_TRUE(beam_pattern_loss(-oracle::kFirstNullTheta_3wl, 0, s, c).is_none());
  EXPECT_TRUE(beam_pattern_loss(oracle::kFirstNullTheta_3wl * 0.98, 0, s, c).has_value());
}

TEST(BeamPattern, BoundedAndSymmetric) {
  const SonarConfig s = aperture_in_wavelengths(3, 2, 1500);
  for (double th = -1.5; th <= 1.5; th += 0.11) {
    for (double ps = -1.5; ps <= 1.5; ps += 0.13) {
      const Level a = beam_pattern_loss(th, ps, s, 1500);
      if (a.is_none()) continue;
      EXPECT_LE(a.value_db(), 0.0);
      if (th != 0.0 || ps != 0.0) EXPECT_LT(a.value_db(), 0.0);
      EXPECT_EQ(beam_pattern_loss(-th, ps, s, 1500), a);
      EXPECT_EQ(beam_pattern_loss(th, -ps, s, 1500), a);
    }
  }
}

TEST(BeamPattern, ApertureGainMatchesAngles) {
  const SonarConfig s = aperture_in_wavelengths(3, 2, 1500);
  const Vec3 v{0.8, 0.3, -0.2};
  const double th = std::atan2(v.y, v.x);
  const double ps = std::atan2(v.z, std::hypot(v.x, v.y));
  const double bp = beam_pattern_loss(th, ps, s, 1500).value_db();
  EXPECT_NEAR(10 * std::log10(aperture_gain(v, 3, 2)), bp, 1e-9);
  EXPECT_EQ(aperture_gain({-0.1, 0.2, 0.0}, 3, 2), 0.0);
}

TEST(Sinc, Convention) {
  EXPECT_EQ(sinc(0), 1.0);
  EXPECT_EQ(sinc(1), 0.0);
  EXPECT_EQ(sinc(-2), 0.0);
  EXPECT_NEAR(sinc(0.5), 2 / std::numbers::pi, 1e-15);
}

TEST(RangeResolution, Examples) {
  EXPECT_DOUBLE_EQ(range_resolution(1500, 50000), 0.015);
  EXPECT_DOUBLE_EQ(range_resolution(1500, 750), 1.0);
  EXPECT_DOUBLE_EQ(range_resolution(1449.2, 50000), 0.014492);
}

TEST(MaxRange, Examples) {
  EXPECT_DOUBLE_EQ(max_range(1500, 15), 50.0);
  EXPECT_DOUBLE_EQ(max_range(1500, 7.5), 100.0);
  EXPECT_DOUBLE_EQ(max_range(1449.2, 10), 72.46);
}

TEST(Noise, ComponentsAtOneKilohertz) {
  EnvironmentParams e;
  const NoiseComponents n = noise_components(1, e);
  EXPECT_DOUBLE_EQ(n.thermal_db, -15.0);
  EXPECT_DOUBLE_EQ(n.turbulence_db, 17.0);
}

TEST(Noise, BandLevelMatchesOracle) {
  const EnvironmentParams e = scenario_env();
  const NoiseComponents n = noise_components(450, e);
  EXPECT_NEAR(n.traffic_db, oracle::kNoiseTraffic_450, 1e-9);
  EXPECT_NEAR(n.sea_state_db, oracle::kNoiseSeaState_450_10kn, 1e-9);
  const double nlb = noise_level_band(450, e, 50000);
  EXPECT_NEAR(nlb, oracle::kNoiseBand_450_10kn, 1e-9);
  const double b = 10 * std::log10(50000.0);
  for (double c : {n.turbulence_db, n.traffic_db, n.sea_state_db, n.thermal_db}) {
    EXPECT_GE(nlb, c + b);
  }
  EXPECT_THROW((void)noise_level_band(-1, e, 50000), ValidationError);
}

TEST(Orientation, NormalizedRange) {
  const BeamOrientation b = BeamOrientation{3 * std::numbers::pi, -std::numbers::pi}.normalized();
  EXPECT_NEAR(b.pitch_rad, std::numbers::pi, 1e-12);
  EXPECT_NEAR(b.yaw_rad, std::numbers::pi, 1e-12);
  EXPECT_THROW((void)(BeamOrientation{NAN, 0}.normalized()), ValidationError);
}

TEST(Purity, RepeatedCallsAreIdentical) {
  const EnvironmentParams e = scenario_env();
  EXPECT_EQ(absorption_coeff(450, e), absorption_coeff(450, e));
  EXPECT_EQ(noise_level_band(450, e, 5e4), noise_level_band(450, e, 5e4));
}
