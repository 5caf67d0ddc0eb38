#pragma once

// Adaptive panel-doubling trapezoid rule with panels aligned to caller-given
// breakpoints (discontinuities of the integrand).

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "flsim/errors.hpp"

namespace flsim {

struct QuadratureSettings {
  /// Convergence threshold between successive doublings.
  double tolerance = 0.01;
  /// true: tolerance is a change in dB of a non-negative integral.
  /// false: tolerance is an absolute change of the integral.
  bool relative_db = true;
  std::size_t initial_panels = 8;
  std::size_t min_doublings = 3;
  std::size_t max_panels = std::size_t{1} << 18;
};

/// Integrates f over [a, b]. Breakpoints inside (a, b) split the range; f is
/// never evaluated exactly on a breakpoint or endpoint but a relative 1e-12
/// inside it, so one-sided limits are used at jumps.
///
/// Throws NumericalDiagnostic when the panel cap is reached first.
template <class F>
double integrate_adaptive(F&& f, double a, double b, std::vector<double> breakpoints,
                          const QuadratureSettings& settings = {}) {
  if (!(b > a)) return 0.0;
  std::vector<double> edges{a};
  std::sort(breakpoints.begin(), breakpoints.end());
  for (double x : breakpoints) {
    if (x > a && x < b && x - edges.back() > 1e-13 * (b - a)) edges.push_back(x);
  }
  if (b - edges.back() <= 1e-13 * (b - a)) edges.pop_back();
  edges.push_back(b);

  struct Segment {
    double lo, hi;
    double ends;      // 0.5 (f(lo+) + f(hi-))
    double interior;  // sum of interior samples
    std::size_t panels;
  };
  std::vector<Segment> segs;
  segs.reserve(edges.size() - 1);
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    const double lo = edges[i];
    const double hi = edges[i + 1];
    const double nudge = 1e-12 * (hi - lo);
    Segment s{lo, hi, 0.5 * (f(lo + nudge) + f(hi - nudge)), 0.0, settings.initial_panels};
    const double h = (hi - lo) / static_cast<double>(s.panels);
    for (std::size_t k = 1; k < s.panels; ++k) s.interior += f(lo + h * static_cast<double>(k));
    segs.push_back(s);
  }

  const auto estimate = [&segs] {
    double total = 0.0;
    for (const auto& s : segs) {
      total += (s.hi - s.lo) / static_cast<double>(s.panels) * (s.ends + s.interior);
    }
    return total;
  };

  double previous = estimate();
  for (std::size_t level = 1;; ++level) {
    std::size_t total_panels = 0;
    for (auto& s : segs) {
      const double h = (s.hi - s.lo) / static_cast<double>(s.panels);
      double added = 0.0;
      for (std::size_t k = 0; k < s.panels; ++k) {
        added += f(s.lo + h * (static_cast<double>(k) + 0.5));
      }
      s.interior += added;
      s.panels *= 2;
      total_panels += s.panels;
    }
    const double current = estimate();
    if (level >= settings.min_doublings) {
      bool converged;
      if (settings.relative_db) {
        converged = (current == 0.0 && previous == 0.0) ||
                    (current > 0.0 && previous > 0.0 &&
                     std::abs(10.0 * std::log10(current / previous)) < settings.tolerance);
      } else {
        converged = std::abs(current - previous) < settings.tolerance;
      }
      if (converged) return current;
    }
    if (total_panels * 2 > settings.max_panels) {
      throw NumericalDiagnostic("quadrature did not converge within " +
                                std::to_string(settings.max_panels) + " panels (last change " +
                                std::to_string(current - previous) + ")");
    }
    previous = current;
  }
}

}  // namespace flsim
