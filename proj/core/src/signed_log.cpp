#include "jacspec/signed_log.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace jacspec {

SignedLogValue SignedLogValue::from_double(double x) {
  if (x == 0.0) return SignedLogValue{};
  return SignedLogValue{x > 0.0 ? 1 : -1, std::log(std::abs(x)), 0.0};
}

SignedLogValue SignedLogValue::from_scaled(double mantissa, double log_scale,
                                           double log_scale_rest) {
  if (mantissa == 0.0) return SignedLogValue{};
  double s, e;
  two_sum(log_scale, std::log(std::abs(mantissa)), s, e);
  return SignedLogValue{mantissa > 0.0 ? 1 : -1, s, e + log_scale_rest};
}

double SignedLogValue::to_double() const {
  if (sign == 0) return 0.0;
  return sign * std::exp(logmag);
}

double scaled_three_term(double c0, const SignedLogValue& v0, double c1,
                         const SignedLogValue& v1, double c2,
                         const SignedLogValue& v2) {
  const double cs[3] = {c0, c1, c2};
  const SignedLogValue* vs[3] = {&v0, &v1, &v2};

  // frame of the largest |c_i v_i|
  int peak = -1;
  double peak_lt = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < 3; ++i) {
    if (cs[i] == 0.0 || vs[i]->is_zero()) continue;
    const double lt = std::log(std::abs(cs[i])) + vs[i]->logmag;
    if (lt > peak_lt) {
      peak_lt = lt;
      peak = i;
    }
  }
  if (peak < 0) return 0.0;

  double sum = 0.0, biggest = 0.0;
  for (int i = 0; i < 3; ++i) {
    if (cs[i] == 0.0 || vs[i]->is_zero()) continue;
    const double term = vs[i]->sign * cs[i] / std::abs(cs[peak]) *
                        std::exp(log_gap(*vs[i], *vs[peak]));
    sum += term;
    biggest = std::max(biggest, std::abs(term));
  }
  return std::abs(sum) / biggest;
}

SignedLogSeq::SignedLogSeq(std::int64_t start_index,
                           std::vector<SignedLogValue> values)
    : start_(start_index), values_(std::move(values)) {
  if (start_ < 1) {
    throw validation_error("SignedLogSeq: start index must be >= 1");
  }
  if (values_.size() < 2) {
    throw validation_error("SignedLogSeq: need at least two values");
  }
  for (const auto& v : values_) {
    if ((v.sign == 0) != std::isinf(v.logmag)) {
      throw validation_error(
          "SignedLogSeq: sign 0 must pair with the -inf log sentinel");
    }
  }
}

SignedLogSeq SignedLogSeq::from_doubles(std::int64_t start_index,
                                        std::span<const double> values) {
  std::vector<SignedLogValue> v;
  v.reserve(values.size());
  for (double x : values) v.push_back(SignedLogValue::from_double(x));
  return SignedLogSeq(start_index, std::move(v));
}

const SignedLogValue& SignedLogSeq::at(std::int64_t n) const {
  if (n < start_ || n > last_index()) {
    throw validation_error("SignedLogSeq: index " + std::to_string(n) +
                           " outside [" + std::to_string(start_) + ", " +
                           std::to_string(last_index()) + "]");
  }
  return values_[static_cast<std::size_t>(n - start_)];
}

double SignedLogSeq::ratio(std::int64_t n) const {
  const auto& lo = at(n);
  const auto& hi = at(n + 1);
  if (lo.is_zero()) {
    throw numeric_error("SignedLogSeq::ratio: division by zero entry at n=" +
                        std::to_string(n));
  }
  if (hi.is_zero()) return 0.0;
  return (hi.sign * lo.sign) * std::exp(log_gap(hi, lo));
}

double SignedLogSeq::log_l2_norm() const {
  double peak = -std::numeric_limits<double>::infinity();
  const SignedLogValue* top = nullptr;
  for (const auto& v : values_) {
    if (!v.is_zero() && v.logmag > peak) {
      peak = v.logmag;
      top = &v;
    }
  }
  if (top == nullptr) return -std::numeric_limits<double>::infinity();
  double acc = 0.0;
  for (const auto& v : values_) {
    if (!v.is_zero()) acc += std::exp(2.0 * log_gap(v, *top));
  }
  return (top->logmag + top->logmag_rest) + 0.5 * std::log(acc);
}

void SignedLogSeq::shift_log(double delta) {
  for (auto& v : values_) {
    if (!v.is_zero()) v.logmag -= delta;
  }
}

}  // namespace jacspec
