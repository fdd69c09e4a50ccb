#pragma once

#include <cmath>
#include <limits>
#include <numbers>

namespace hyperdual::detail {

/// Streaming log(sum exp(x_i)). The running sum is kept relative to the
/// largest exponent seen and accumulated with Neumaier compensation.
class LogSumExp {
 public:
  void add(double x) { add_scaled(x, 1.0, 0.0); }

  void merge(const LogSumExp& other) {
    if (other.empty()) return;
    add_scaled(other.shift_, other.sum_, other.comp_);
  }

  [[nodiscard]] bool empty() const { return shift_ == -std::numeric_limits<double>::infinity(); }

  [[nodiscard]] double log() const {
    if (empty()) return -std::numeric_limits<double>::infinity();
    return shift_ + std::log(sum_ + comp_);
  }

  /// exp(log()) scaled by 2^binary_exponent, without the log round trip
  /// when the result is representable.
  [[nodiscard]] double value(int binary_exponent = 0) const {
    if (empty()) return 0.0;
    const double direct = std::ldexp(std::exp(shift_) * (sum_ + comp_), binary_exponent);
    if (std::isfinite(direct) && direct > std::numeric_limits<double>::min()) return direct;
    return std::exp(log() + binary_exponent * std::numbers::ln2);
  }

 private:
  // Adds exp(x) * (s + c).
  void add_scaled(double x, double s, double c) {
    if (x > shift_) {
      const double scale = empty() ? 0.0 : std::exp(shift_ - x);
      sum_ *= scale;
      comp_ *= scale;
      shift_ = x;
    } else {
      const double scale = std::exp(x - shift_);
      s *= scale;
      c *= scale;
    }
    accumulate(s);
    accumulate(c);
  }

  void accumulate(double term) {
    const double t = sum_ + term;
    if (std::fabs(sum_) >= std::fabs(term)) {
      comp_ += (sum_ - t) + term;
    } else {
      comp_ += (term - t) + sum_;
    }
    sum_ = t;
  }

  double shift_ = -std::numeric_limits<double>::infinity();
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace hyperdual::detail
