#pragma once

#include <cmath>
#include <initializer_list>
#include <optional>
#include <span>

namespace flsim {

/// An intensity level in dB, or the distinguished "no response" value that
/// stands for zero linear intensity.
///
/// No-response absorbs dB addition (a zero-energy path stays zero after any
/// gain) and contributes nothing to power sums.
class Level {
 public:
  constexpr Level() noexcept = default;

  static constexpr Level none() noexcept { return Level{}; }
  static constexpr Level db(double value) noexcept { return Level{value}; }
  static Level from_linear(double power) noexcept {
    return power > 0.0 ? Level{10.0 * std::log10(power)} : none();
  }

  [[nodiscard]] constexpr bool has_value() const noexcept { return present_; }
  [[nodiscard]] constexpr bool is_none() const noexcept { return !present_; }
  /// Value in dB. Must not be called on no-response.
  [[nodiscard]] constexpr double value_db() const noexcept { return db_; }
  [[nodiscard]] double linear() const noexcept {
    return present_ ? std::pow(10.0, db_ / 10.0) : 0.0;
  }
  [[nodiscard]] constexpr std::optional<double> as_optional() const noexcept {
    return present_ ? std::optional<double>{db_} : std::nullopt;
  }

  friend constexpr Level operator+(Level a, Level b) noexcept {
    return (a.present_ && b.present_) ? Level{a.db_ + b.db_} : none();
  }
  friend constexpr Level operator+(Level a, double b) noexcept {
    return a.present_ ? Level{a.db_ + b} : none();
  }
  friend constexpr Level operator+(double a, Level b) noexcept { return b + a; }
  friend constexpr Level operator-(Level a, double b) noexcept { return a + (-b); }

  friend constexpr bool operator==(Level a, Level b) noexcept {
    return a.present_ == b.present_ && (!a.present_ || a.db_ == b.db_);
  }

 private:
  constexpr explicit Level(double value) noexcept : db_(value), present_(true) {}

  double db_ = 0.0;
  bool present_ = false;
};

/// 10·log10 of the sum of linear powers; no-response terms contribute zero.
/// All-none input yields none.
[[nodiscard]] inline Level power_sum(std::span<const Level> levels) noexcept {
  double total = 0.0;
  bool any = false;
  for (const Level& l : levels) {
    if (l.has_value()) {
      total += l.linear();
      any = true;
    }
  }
  return any ? Level::from_linear(total) : Level::none();
}

[[nodiscard]] inline Level power_sum(std::initializer_list<Level> levels) noexcept {
  return power_sum(std::span<const Level>(levels.begin(), levels.size()));
}

}  // namespace flsim
