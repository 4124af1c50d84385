#include "jacspec/recurrence.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

namespace jacspec {

namespace {

void require_nonzero_seed(double a, double b) {
  if (a == 0.0 && b == 0.0) {
    throw validation_error(
        "recurrence: zero seed pair gives only the trivial solution");
  }
}

// Running local frame: values are mantissa * exp(hi + lo).
struct Frame {
  double hi = 0.0;
  double lo = 0.0;

  void add(double t) {
    double s, e;
    two_sum(hi, t, s, e);
    hi = s;
    lo += e;
  }
};

// Divide the active pair by its max magnitude, fold the scale into the frame.
void rescale(double& u, double& v, Frame& L) {
  const double m = std::max(std::abs(u), std::abs(v));
  if (m > 0.0) {
    u /= m;
    v /= m;
    L.add(std::log(m));
  }
}

}  // namespace

SignedLogSeq recurrence_forward(const JacobiFamily& fam, double lambda,
                                double f1, double f2, std::int64_t n_max) {
  if (n_max < 2) throw validation_error("recurrence_forward: n_max must be >= 2");
  require_nonzero_seed(f1, f2);

  std::vector<SignedLogValue> out;
  out.reserve(static_cast<std::size_t>(n_max));
  double u = f1, v = f2;
  Frame L;
  rescale(u, v, L);
  out.push_back(SignedLogValue::from_scaled(u, L.hi, L.lo));
  out.push_back(SignedLogValue::from_scaled(v, L.hi, L.lo));
  double b_prev = weight(fam, 1);
  for (std::int64_t n = 2; n < n_max; ++n) {
    const double b_n = weight(fam, n);
    const double next = ((lambda - diagonal(fam, n)) * v - b_prev * u) / b_n;
    u = v;
    v = next;
    rescale(u, v, L);
    out.push_back(SignedLogValue::from_scaled(v, L.hi, L.lo));
    b_prev = b_n;
  }
  return SignedLogSeq(1, std::move(out));
}

SignedLogSeq first_kind_polynomials(const JacobiFamily& fam, double lambda,
                                    std::int64_t n_max) {
  const double f2 = (lambda - diagonal(fam, 1)) / weight(fam, 1);
  return recurrence_forward(fam, lambda, 1.0, f2, n_max);
}

SignedLogSeq recurrence_backward(const JacobiFamily& fam, double lambda,
                                 std::int64_t m, SignedLogValue f_m,
                                 SignedLogValue f_m1, std::int64_t down_to) {
  if (down_to < 1 || m <= down_to) {
    throw validation_error("recurrence_backward: need m > down_to >= 1");
  }
  if (f_m.is_zero() && f_m1.is_zero()) {
    throw validation_error(
        "recurrence: zero seed pair gives only the trivial solution");
  }

  // Work in the frame of the larger seed magnitude.
  const bool top_bigger =
      f_m.is_zero() || (!f_m1.is_zero() && log_gap(f_m1, f_m) > 0.0);
  const SignedLogValue& big = top_bigger ? f_m1 : f_m;
  Frame L{big.logmag, big.logmag_rest};
  double u = f_m.is_zero() ? 0.0 : f_m.sign * std::exp(log_gap(f_m, big));
  double v = f_m1.is_zero() ? 0.0 : f_m1.sign * std::exp(log_gap(f_m1, big));

  std::vector<SignedLogValue> rev;  // indices m+1, m, m-1, ..., down_to
  rev.reserve(static_cast<std::size_t>(m + 2 - down_to));
  rev.push_back(SignedLogValue::from_scaled(v, L.hi, L.lo));
  rev.push_back(SignedLogValue::from_scaled(u, L.hi, L.lo));
  for (std::int64_t k = m; k > down_to; --k) {
    // solve the three-term relation at index k for f_{k-1}
    const double prev =
        ((lambda - diagonal(fam, k)) * u - weight(fam, k) * v) / weight(fam, k - 1);
    v = u;
    u = prev;
    rescale(u, v, L);
    rev.push_back(SignedLogValue::from_scaled(u, L.hi, L.lo));
  }
  std::reverse(rev.begin(), rev.end());
  return SignedLogSeq(down_to, std::move(rev));
}

SignedLogSeq recurrence_backward(const JacobiFamily& fam, double lambda,
                                 std::int64_t m, double f_m, double f_m1,
                                 std::int64_t down_to) {
  require_nonzero_seed(f_m, f_m1);
  return recurrence_backward(fam, lambda, m, SignedLogValue::from_double(f_m),
                             SignedLogValue::from_double(f_m1), down_to);
}

double three_term_residual(const JacobiFamily& fam, double lambda,
                           const SignedLogSeq& f) {
  double worst = 0.0;
  for (std::int64_t n = f.first_index() + 1; n < f.last_index(); ++n) {
    const double r = scaled_three_term(
        weight(fam, n - 1), f.at(n - 1), diagonal(fam, n) - lambda, f.at(n),
        weight(fam, n), f.at(n + 1));
    worst = std::max(worst, r);
  }
  return worst;
}

double boundary_defect(const JacobiFamily& fam, double lambda,
                       const SignedLogSeq& f) {
  if (f.first_index() != 1) {
    throw validation_error("boundary_defect: sequence must start at index 1");
  }
  const auto& f1 = f.at(1);
  const auto& f2 = f.at(2);
  if (f1.is_zero() && f2.is_zero()) return 0.0;
  const SignedLogValue& big =
      (f1.is_zero() || (!f2.is_zero() && log_gap(f2, f1) > 0.0)) ? f2 : f1;
  const double u1 = f1.is_zero() ? 0.0 : f1.sign * std::exp(log_gap(f1, big));
  const double u2 = f2.is_zero() ? 0.0 : f2.sign * std::exp(log_gap(f2, big));
  return ((diagonal(fam, 1) - lambda) * u1 + weight(fam, 1) * u2) /
         std::max(std::abs(u1), std::abs(u2));
}

}  // namespace jacspec
