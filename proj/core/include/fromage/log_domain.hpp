#pragma once

#include <cmath>
#include <limits>

namespace fromage {

/// Nonnegative magnitude stored as its natural log. Values like the
/// deep-level eps_n underflow doubles immediately; their logs do not.
class LogMag {
 public:
  LogMag() = default;
  static LogMag from_log(double lg) { return LogMag(lg); }
  static LogMag from_value(double v) {
    return LogMag(v > 0.0 ? std::log(v) : -std::numeric_limits<double>::infinity());
  }

  double log() const { return log_; }
  bool is_zero() const { return std::isinf(log_) && log_ < 0.0; }

  /// Nearest double; 0 on underflow, +inf on overflow.
  double to_double() const { return std::exp(log_); }

  friend LogMag operator*(LogMag a, LogMag b) { return LogMag(a.log_ + b.log_); }
  friend LogMag operator/(LogMag a, LogMag b) { return LogMag(a.log_ - b.log_); }
  friend bool operator<(LogMag a, LogMag b) { return a.log_ < b.log_; }
  friend bool operator<=(LogMag a, LogMag b) { return a.log_ <= b.log_; }

  LogMag pow(double e) const { return LogMag(log_ * e); }

 private:
  explicit LogMag(double lg) : log_(lg) {}
  double log_ = -std::numeric_limits<double>::infinity();
};

}  // namespace fromage
