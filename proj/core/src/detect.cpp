#include "flsim/detect.hpp"

#include <cmath>
#include <string>

#include "flsim/errors.hpp"

namespace flsim {

GaussianDbModel::GaussianDbModel(double sigma_db, double alt_offset_db)
    : sigma_(sigma_db), offset_(alt_offset_db) {
  if (!(std::isfinite(sigma_db) && sigma_db > 0.0)) {
    throw ValidationError("detect.sigma_db must be finite and > 0");
  }
  if (!std::isfinite(alt_offset_db)) throw ValidationError("detect.alt_offset_db must be finite");
}

double GaussianDbModel::log_likelihood_ratio(double z_db, double null_mean_db) const {
  const double s2 = sigma_ * sigma_;
  return (z_db - null_mean_db) * offset_ / s2 - offset_ * offset_ / (2.0 * s2);
}

PdPfa GaussianDbModel::pd_pfa(double gamma) const {
  if (gamma <= 0.0) return {1.0, 1.0};
  const double log_gamma = std::log(gamma);
  if (offset_ == 0.0) {
    // lambda is identically 1.
    return log_gamma <= 0.0 ? PdPfa{1.0, 1.0} : PdPfa{0.0, 0.0};
  }
  // Decision region in x = z - null mean: x >= t for a positive offset, x <= t otherwise.
  const double t = sigma_ * sigma_ * log_gamma / offset_ + offset_ / 2.0;
  if (offset_ > 0.0) return {normal_q((t - offset_) / sigma_), normal_q(t / sigma_)};
  return {normal_q(-(t - offset_) / sigma_), normal_q(-t / sigma_)};
}

double normal_q(double x) noexcept { return 0.5 * std::erfc(x / std::sqrt(2.0)); }

double likelihood_ratio(Level z, double null_mean_db, const MeasurementModel& model) {
  if (z.is_none()) return 0.0;
  return std::exp(model.log_likelihood_ratio(z.value_db(), null_mean_db));
}

int decide(double lambda, double gamma) noexcept { return lambda >= gamma ? 1 : 0; }

PdPfa pd_pfa(double gamma, const MeasurementModel& model) {
  if (gamma <= 0.0) return {1.0, 1.0};
  return model.pd_pfa(gamma);
}

DetectionResult detect_ping(const PingReturn& ping, const std::vector<NullModelReturn>& nulls,
                            double gamma, const MeasurementModel& model) {
  if (std::isnan(gamma)) throw ValidationError("detect.gamma must not be NaN");
  if (nulls.size() != ping.beams.size()) {
    throw ValidationError("detect: " + std::to_string(nulls.size()) + " null tables for " +
                          std::to_string(ping.beams.size()) + " beams");
  }
  DetectionResult out{gamma, {}, pd_pfa(gamma, model)};
  for (std::size_t b = 0; b < ping.beams.size(); ++b) {
    const std::vector<double>& z = ping.beams[b].total;
    const NullModelReturn& null = nulls[b];
    if (null.bins.size() != z.size()) {
      throw ValidationError("detect: null table for beam " + std::to_string(b) +
                            " does not match the ping's bin count");
    }
    for (std::size_t i = 0; i < z.size(); ++i) {
      BinDecision d;
      d.beam = b;
      d.bin = i + 1;
      d.z = Level::from_linear(z[i]);
      d.null_mean = null.bins[i].total;
      if (d.null_mean.is_none()) {
        d.excluded = true;
      } else {
        d.lambda = likelihood_ratio(d.z, d.null_mean.value_db(), model);
        d.decision = decide(d.lambda, gamma);
      }
      out.bins.push_back(d);
    }
  }
  return out;
}

}  // namespace flsim
