#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "jacspec/errors.hpp"

namespace jacspec {

/// Error-free sum: s + e == a + b exactly, with s = fl(a + b).
inline void two_sum(double a, double b, double& s, double& e) {
  s = a + b;
  const double bb = s - a;
  e = (a - (s - bb)) + (b - bb);
}

/// One sequence entry stored as a sign and the natural log of its magnitude.
/// Solutions here grow or decay like exp(±C n^{1-alpha/2}), which leaves the
/// double range near n ~ 1e5; the log form does not.
///
/// logmag carries a small compensation term: at |logmag| ~ 1e4 a single
/// double quantizes at ~1e-12, which would dominate every scaled residual.
/// Index-local differences taken through log_gap stay at mantissa precision.
struct SignedLogValue {
  int sign = 0;  // -1, 0, +1
  double logmag = -std::numeric_limits<double>::infinity();
  double logmag_rest = 0.0;  // compensation; the working value is logmag + rest

  static SignedLogValue from_double(double x);
  // value = mantissa * exp(log_scale + log_scale_rest)
  static SignedLogValue from_scaled(double mantissa, double log_scale,
                                    double log_scale_rest = 0.0);

  bool is_zero() const { return sign == 0; }
  /// Plain double value; overflows/underflows for |logmag| beyond ~709.
  double to_double() const;
};

/// log|a| - log|b| at full precision (both nonzero).
inline double log_gap(const SignedLogValue& a, const SignedLogValue& b) {
  return (a.logmag - b.logmag) + (a.logmag_rest - b.logmag_rest);
}

/// |c0 v0 + c1 v1 + c2 v2| / max_i |c_i v_i| evaluated in the frame of the
/// largest term; 0 when all terms vanish.
double scaled_three_term(double c0, const SignedLogValue& v0, double c1,
                         const SignedLogValue& v1, double c2,
                         const SignedLogValue& v2);

/// Contiguously indexed signed-log sequence. Two consecutive values determine
/// a solution of the three-term recurrence, so length >= 2 is required.
class SignedLogSeq {
 public:
  SignedLogSeq(std::int64_t start_index, std::vector<SignedLogValue> values);

  static SignedLogSeq from_doubles(std::int64_t start_index,
                                   std::span<const double> values);

  std::int64_t first_index() const { return start_; }
  std::int64_t last_index() const {
    return start_ + static_cast<std::int64_t>(values_.size()) - 1;
  }
  std::size_t size() const { return values_.size(); }

  const SignedLogValue& at(std::int64_t n) const;

  /// value(n) as an ordinary double (subject to range).
  double value(std::int64_t n) const { return at(n).to_double(); }

  /// value(n+1) / value(n); requires value(n) != 0.
  double ratio(std::int64_t n) const;

  /// log of the l2 norm, computed as 0.5 * logsumexp(2 logmag).
  double log_l2_norm() const;

  /// Rescales the whole sequence by exp(-delta).
  void shift_log(double delta);

  /// Rescales to unit l2 norm.
  void normalize_l2() { shift_log(log_l2_norm()); }

 private:
  std::int64_t start_;
  std::vector<SignedLogValue> values_;
};

}  // namespace jacspec
