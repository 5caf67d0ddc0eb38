#pragma once

// Likelihood-ratio obstacle detection over per-bin returns.

#include <cstddef>
#include <vector>

#include "flsim/level.hpp"
#include "flsim/nullmodel.hpp"
#include "flsim/raysim.hpp"

namespace flsim {

struct PdPfa {
  double pd = 0.0;
  double pfa = 0.0;
};

/// Distribution of a measurement z (dB) given the expected no-obstacle level.
class MeasurementModel {
 public:
  virtual ~MeasurementModel() = default;
  /// ln p(z | obstacle) - ln p(z | no obstacle).
  [[nodiscard]] virtual double log_likelihood_ratio(double z_db, double null_mean_db) const = 0;
  /// Probabilities that the decision lambda >= gamma fires under each hypothesis.
  [[nodiscard]] virtual PdPfa pd_pfa(double gamma) const = 0;
};

/// z ~ N(mu, sigma^2) with mu = null mean (no obstacle) or null mean +
/// alt_offset_db (obstacle).
class GaussianDbModel final : public MeasurementModel {
 public:
  GaussianDbModel(double sigma_db, double alt_offset_db);

  [[nodiscard]] double sigma_db() const noexcept { return sigma_; }
  [[nodiscard]] double alt_offset_db() const noexcept { return offset_; }

  [[nodiscard]] double log_likelihood_ratio(double z_db, double null_mean_db) const override;
  [[nodiscard]] PdPfa pd_pfa(double gamma) const override;

 private:
  double sigma_;
  double offset_;
};

/// Standard normal upper tail.
[[nodiscard]] double normal_q(double x) noexcept;

/// exp(log_likelihood_ratio); a no-response measurement gives 0.
[[nodiscard]] double likelihood_ratio(Level z, double null_mean_db, const MeasurementModel& model);

/// 1 when lambda >= gamma.
[[nodiscard]] int decide(double lambda, double gamma) noexcept;

/// gamma <= 0 covers the whole support: (1, 1).
[[nodiscard]] PdPfa pd_pfa(double gamma, const MeasurementModel& model);

struct BinDecision {
  std::size_t beam = 0;
  std::size_t bin = 0;
  Level z;
  Level null_mean;
  bool excluded = false;  ///< null mean is no-response; no decision made
  double lambda = 0.0;
  int decision = 0;
};

struct DetectionResult {
  double gamma = 1.0;
  std::vector<BinDecision> bins;
  PdPfa summary;
};

/// One decision per (beam, bin). `nulls[b]` is the expected null for beam b.
[[nodiscard]] DetectionResult detect_ping(const PingReturn& ping,
                                          const std::vector<NullModelReturn>& nulls, double gamma,
                                          const MeasurementModel& model);

}  // namespace flsim
