#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "flsim/errors.hpp"
#include "flsim/scatter.hpp"
#include "oracle_values.hpp"

using namespace flsim;
namespace oracle = flsim::oracle;

TEST(BottomCoeff, NormalIncidenceGamma) {
  // At pi/2, cot = 0 and the exponent (bt cos^16) vanishes, so beta = gamma.
  const double gamma = 1 + 125 * std::exp(-0.165);
  EXPECT_NEAR(gamma, oracle::kGammaSand_Normal, 1e-9);
  const double expected = 10 * std::log10(3.03 * gamma * std::pow(450.0, 3.2 - 1.6) *
                                              std::pow(10.0, 5.6 - 12) +
                                          std::pow(10.0, -4.42));
  EXPECT_NEAR(bottom_coeff(2, std::numbers::pi / 2, 450), expected, 1e-9);
  EXPECT_NEAR(bottom_coeff(2, std::numbers::pi / 2, 450), oracle::kBottomSand_Normal_450, 1e-9);
}

TEST(BottomCoeff, Oracle) {
  EXPECT_NEAR(bottom_coeff(2, 0.5, 450), oracle::kBottomSand_05_450, 1e-9);
}

TEST(BottomCoeff, FloorAtLowFrequency) {
  EXPECT_NEAR(bottom_coeff(2, 0.7, 1e-12), -44.2, 1e-6);
}

TEST(BottomCoeff, NeverBelowFloorOrNan) {
  for (double bt = 1; bt <= 4; bt += 0.5) {
    for (double g : {1e-12, 1e-6, 0.01, 0.3, 1.0, std::numbers::pi / 2}) {
      for (double f : {1e-3, 1.0, 100.0, 450.0, 1000.0}) {
        const double s = bottom_coeff(bt, g, f);
        EXPECT_FALSE(std::isnan(s));
        EXPECT_GE(s, -44.2 - 1e-12);
      }
    }
  }
}

TEST(BottomCoeff, RejectsBadInput) {
  EXPECT_THROW((void)bottom_coeff(2, 0, 450), ValidationError);
  EXPECT_THROW((void)bottom_coeff(2, 2.0, 450), ValidationError);
  EXPECT_THROW((void)bottom_coeff(5, 0.5, 450), ValidationError);
  EXPECT_THROW((void)bottom_coeff(2, 0.5, 0), ValidationError);
}

TEST(SurfaceCoeff, ExponentAtZeroWind) {
  for (double g : {0.1, 0.5, 1.2}) {
    EXPECT_NEAR(surface_exponent(0, g, 0.9), 8 - 1.5 * std::pow(std::cos(g), 0.125), 1e-12);
  }
}

TEST(SurfaceCoeff, Oracle) {
  EXPECT_NEAR(surface_coeff(10, 0.3, 450), oracle::kSurface_10kn_03_450, 1e-9);
  EXPECT_NEAR(surface_coeff(5, 0.3, 450), oracle::kSurface_5kn_03_450, 1e-9);
  EXPECT_NEAR(surface_coeff(20, 0.3, 450), oracle::kSurface_20kn_03_450, 1e-9);
  EXPECT_GT(surface_coeff(20, 0.3, 450), surface_coeff(5, 0.3, 450));
}

TEST(SurfaceCoeff, CappedNearNormal) {
  const double at_cap = surface_coeff(10, kSurfaceGrazingCapRad, 450);
  EXPECT_TRUE(std::isfinite(at_cap));
  EXPECT_EQ(surface_coeff(10, std::numbers::pi / 2, 450), at_cap);
  EXPECT_EQ(surface_coeff(10, 2.0, 450), at_cap);
}

TEST(VolumeCoeff, Examples) {
  EXPECT_DOUBLE_EQ(volume_coeff(-90, 1), -90.0);
  EXPECT_DOUBLE_EQ(volume_coeff(-90, 100), -76.0);
  EXPECT_DOUBLE_EQ(volume_coeff(-50, 10), -43.0);
  EXPECT_NEAR(volume_coeff(-70, 4500), volume_coeff(-70, 450) + 7, 1e-12);
}

TEST(ReverbLevel, Examples) {
  const Level z = Level::db(0);
  EXPECT_NEAR(reverb_level(0, 0, z, z, -44.2, 1).value_db(), -44.2, 1e-12);
  EXPECT_NEAR(reverb_level(0, 0, z, z, -44.2, 100).value_db(), -24.2, 1e-12);
  EXPECT_TRUE(reverb_level(0, 0, z, z, -44.2, 0).is_none());
  EXPECT_TRUE(reverb_level(0, 0, Level::none(), z, -44.2, 1).is_none());
  EXPECT_TRUE(reverb_level(0, 0, z, Level::none(), -44.2, 1).is_none());
}

TEST(ReverbLevel, ShiftAndDoubling) {
  const Level t = Level::db(-3.5);
  const Level r = Level::db(-1.25);
  const double base = reverb_level(10, 55, t, r, -30, 2.5).value_db();
  EXPECT_NEAR(reverb_level(17, 55, t, r, -30, 2.5).value_db(), base + 7, 1e-12);
  EXPECT_NEAR(reverb_level(10, 55, t, r, -30, 5.0).value_db(), base + 10 * std::log10(2.0),
              1e-12);
}

TEST(TargetEcho, Examples) {
  const Level z = Level::db(0);
  EXPECT_DOUBLE_EQ(target_echo_level(0, 0, z, z, Level::db(-10)).value_db(), -10.0);
  EXPECT_DOUBLE_EQ(target_echo_level(0, 40, z, z, Level::db(-10)).value_db(), -50.0);
  EXPECT_TRUE(target_echo_level(0, 40, z, z, Level::none()).is_none());
}

TEST(TargetStrength, Examples) {
  const ObjectMaterial rock{4.0};
  const double g = std::numbers::pi / 2;
  const Level one = target_strength(1, g, 450, rock);
  EXPECT_DOUBLE_EQ(one.value_db(), bottom_coeff(4, g, 450));
  EXPECT_TRUE(target_strength(0, g, 450, rock).is_none());
  EXPECT_NEAR(target_strength(2, g, 450, rock).value_db() - one.value_db(), 3.0103, 1e-4);
  EXPECT_NEAR(target_strength(7, 0.4, 450, rock).value_db() -
                  target_strength(0.35, 0.4, 450, rock).value_db(),
              10 * std::log10(20.0), 1e-12);
}

TEST(ObjectMaterial, Bounds) {
  EXPECT_NO_THROW(ObjectMaterial{1.0}.validate());
  EXPECT_THROW(ObjectMaterial{0.5}.validate(), ValidationError);
  EXPECT_THROW(ObjectMaterial{4.5}.validate(), ValidationError);
}
