#pragma once

// Reference values produced by tests/oracles/derive.py (dense-grid numpy
// evaluation of the defining formulas) and frozen here.

#include <utility>

namespace flsim::oracle {

inline constexpr double kSoundSpeed_10_35_50 = 1490.79;
inline constexpr double kAbsorption_100k_T10 = 33.115931105115045;  // S35, zmax 100, pH 8, c(z=0)
inline constexpr double kAbsorption_450k_T20 = 133.217696219734;    // low A3 branch at T = 20
inline constexpr double kA3_T20 = 0.00022010000000000004;

// Scenario conditions: T 10, S 35, z 7, zmax 12, pH 8, f 450 kHz.
inline constexpr double kScenarioSoundSpeed = 1490.102;
inline constexpr double kScenarioAlpha = 109.41941130251047;
inline constexpr double kScenarioTl35 = 69.31266115388425;

inline constexpr double kFirstNullTheta_3wl = 0.3398369094541219;  // asin(1/3)

inline constexpr double kNoiseBand_450_10kn = 85.07069430569473;
inline constexpr double kNoiseTraffic_450 = -50.210962588385925;
inline constexpr double kNoiseSeaState_450_10kn = 13.933368813481152;

inline constexpr double kGammaSand_Normal = 106.98671301098949;
inline constexpr double kBottomSand_Normal_450 = 3.5591977087984805;
inline constexpr double kBottomSand_05_450 = -17.15703400212046;
inline constexpr double kSurface_10kn_03_450 = -31.525159050988165;
inline constexpr double kSurface_5kn_03_450 = -39.21857312702875;
inline constexpr double kSurface_20kn_03_450 = -23.257383302523223;

inline constexpr double kRingGrazing_6_5_h5 = 1.141096660643472;

// Scenario-1 beam pair (forward transmitter and receiver, L_H = 3 lambda,
// L_V = 2 lambda), bin 40 of 0.25 m bins, h = 5, h_d = 7.
inline constexpr double kRingAvgBin40Db = -89.93511022873608;     // 10^6-point reference
inline constexpr double kSphereAvgBin40Db = -22.26809960316286;
inline constexpr double kSphereAvgOpenDb = -22.255129853040142;

inline constexpr std::pair<int, double> kBottomCurve[] = {
    {21, -93.201257},  {27, -80.451587},  {33, -87.815558},  {39, -116.432779},
    {45, -101.297333}, {51, -90.244501},  {57, -86.149800},  {63, -84.478661},
    {69, -83.965357},  {75, -84.079152},  {81, -84.554393},  {87, -85.244398},
    {93, -86.063050},  {99, -86.957654},  {105, -87.895030}, {111, -88.853881},
    {117, -89.820366}, {123, -90.785452}, {129, -91.743256}, {135, -92.689999},
    {141, -93.623319}, {147, -94.541816}, {153, -95.444749}, {159, -96.331826},
    {165, -97.203060}, {171, -98.058671}, {177, -98.899015}, {183, -99.724538},
    {189, -100.535736}, {195, -101.333135},
};

inline constexpr std::pair<int, double> kSurfaceCurve[] = {
    {29, -117.720536}, {35, -96.239688},  {41, -98.160555},  {47, -106.814944},
    {53, -125.629437}, {59, -133.661873}, {65, -115.196883}, {71, -108.541128},
    {77, -105.135254}, {83, -103.236889}, {89, -102.183641}, {95, -101.653969},
    {101, -101.469279}, {107, -101.521506}, {113, -101.741258}, {119, -102.081996},
    {125, -102.511446}, {131, -103.006632}, {137, -103.550847}, {143, -104.131727},
    {149, -104.739989}, {155, -105.368580}, {161, -106.012088}, {167, -106.666323},
    {173, -107.328018}, {179, -107.994616}, {185, -108.664102}, {191, -109.334888},
    {197, -110.005715},
};

inline constexpr std::pair<int, double> kVolumeCurve[] = {
    {1, -105.632975},  {5, -89.815110},   {10, -96.621738}, {20, -103.424713},
    {21, -103.914102}, {29, -107.220072}, {40, -110.665510}, {80, -119.042002},
    {141, -128.187473}, {199, -135.358088},
};

}  // namespace flsim::oracle
