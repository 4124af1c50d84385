#include "jacspec/poincare.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace jacspec {

namespace {

void require_admissible(const JacobiFamily& fam, double lambda, std::int64_t n,
                        const char* who) {
  if (n < 1) throw validation_error(std::string(who) + ": n must be >= 1");
  if (!(diagonal(fam, 2 * n) > lambda)) {
    throw validation_error(std::string(who) + ": index n=" + std::to_string(n) +
                           " below the admissible range (q_{2n} <= lambda)");
  }
}

void require_critical(const JacobiFamily& fam, const char* who) {
  if (!fam.critical_boundary()) {
    throw validation_error(std::string(who) +
                           ": expansion defined only on |c1 - c2| = 1");
  }
  if (!(fam.alpha > 1.0 / 3.0 && fam.alpha < 0.5)) {
    throw validation_error(std::string(who) +
                           ": expansion derived for alpha in (1/3, 1/2)");
  }
}

}  // namespace

std::int64_t min_index_N(const SpectralWindow& window, double alpha) {
  // smallest integer N >= hi^{1/alpha} / 2, bumped until (2N)^alpha > hi
  const double raw = std::pow(window.hi, 1.0 / alpha) / 2.0;
  std::int64_t N = std::max<std::int64_t>(1, static_cast<std::int64_t>(std::ceil(raw)));
  while (!(std::pow(2.0 * static_cast<double>(N), alpha) > window.hi)) ++N;
  return N;
}

double poincare_F(const JacobiFamily& fam, double lambda, std::int64_t n) {
  require_admissible(fam, lambda, n, "poincare_F");
  const double q2n = diagonal(fam, 2 * n);
  const double q2n1 = diagonal(fam, 2 * n + 1);
  const double q2n2 = diagonal(fam, 2 * n + 2);
  const double b2n = weight(fam, 2 * n);
  const double b2n1 = weight(fam, 2 * n + 1);
  const double b2n2 = weight(fam, 2 * n + 2);
  return (q2n2 - lambda) * b2n * b2n / ((q2n - lambda) * b2n1 * b2n2) -
         (q2n1 - lambda) * (q2n2 - lambda) / (b2n1 * b2n2) + b2n1 / b2n2;
}

double poincare_G(const JacobiFamily& fam, double lambda, std::int64_t n) {
  require_admissible(fam, lambda, n, "poincare_G");
  const double q2n = diagonal(fam, 2 * n);
  const double q2n2 = diagonal(fam, 2 * n + 2);
  return (q2n2 - lambda) * weight(fam, 2 * n - 1) * weight(fam, 2 * n) /
         ((q2n - lambda) * weight(fam, 2 * n + 1) * weight(fam, 2 * n + 2));
}

double coeff_A(const JacobiFamily& fam, double lambda, std::int64_t n) {
  require_admissible(fam, lambda, n, "coeff_A");
  const double a = fam.alpha;
  const double p2n = std::pow(2.0 * n, a);
  const double p2n1 = std::pow(2.0 * n + 1.0, a);
  const double p2n2 = std::pow(2.0 * n + 2.0, a);
  return (p2n2 - lambda) * p2n * p2n / ((p2n - lambda) * p2n1 * p2n2);
}

double coeff_B(const JacobiFamily& fam, double lambda, std::int64_t n) {
  if (n < 1) throw validation_error("coeff_B: n must be >= 1");
  const double a = fam.alpha;
  const double p2n1 = std::pow(2.0 * n + 1.0, a);
  const double p2n2 = std::pow(2.0 * n + 2.0, a);
  return (p2n1 - lambda) * (p2n2 - lambda) / (p2n1 * p2n2);
}

double coeff_C(const JacobiFamily& fam, std::int64_t n) {
  if (n < 1) throw validation_error("coeff_C: n must be >= 1");
  return std::pow((2.0 * n + 1.0) / (2.0 * n + 2.0), fam.alpha);
}

AsymptoticExpansion F_expansion(const JacobiFamily& fam) {
  require_critical(fam, "F_expansion");
  const double a = fam.alpha;
  const double cc = fam.c1 * fam.c2;
  std::vector<ExpansionTerm> terms;
  terms.push_back({[](double) { return 2.0; }, 0.0});
  terms.push_back({[a, cc](double lam) { return std::pow(2.0, 1.0 - a) * lam / cc; }, a});
  terms.push_back(
      {[a, cc](double lam) { return -std::pow(2.0, -2.0 * a) * lam * lam / cc; },
       2.0 * a});
  terms.push_back(
      {[a, cc](double) { return -a * (1.0 + 1.0 / (2.0 * cc)); }, 1.0});
  return AsymptoticExpansion(std::move(terms), 1.0 + a);
}

AsymptoticExpansion G_expansion(const JacobiFamily& fam) {
  require_critical(fam, "G_expansion");
  const double a = fam.alpha;
  std::vector<ExpansionTerm> terms;
  terms.push_back({[](double) { return 1.0; }, 0.0});
  terms.push_back({[a](double) { return -a; }, 1.0});
  return AsymptoticExpansion(std::move(terms), 1.0 + a);
}

SignedLogSeq reconstruct_f_from_x(const JacobiFamily& fam, double lambda,
                                  const SignedLogSeq& x) {
  const std::int64_t nlo = x.first_index();
  const std::int64_t nhi = x.last_index();

  // f_{2n+1} = x_n on [nlo, nhi]; f_{2n} = y_n on [nlo+1, nhi]
  const std::int64_t f_start = 2 * nlo + 1;
  const std::int64_t f_end = 2 * nhi + 1;
  std::vector<SignedLogValue> f(static_cast<std::size_t>(f_end - f_start + 1));
  for (std::int64_t n = nlo; n <= nhi; ++n) {
    f[static_cast<std::size_t>(2 * n + 1 - f_start)] = x.at(n);
  }
  for (std::int64_t n = nlo + 1; n <= nhi; ++n) {
    const double q2n = diagonal(fam, 2 * n);
    const double denom = lambda - q2n;
    const double scale = std::max(std::abs(lambda), q2n);
    if (std::abs(denom) < 1e-12 * scale) {
      throw validation_error(
          "reconstruct_f_from_x: lambda - q_{2n} vanishes at n=" +
          std::to_string(n));
    }
    const auto& xm = x.at(n - 1);
    const auto& xn = x.at(n);
    if (xm.is_zero() && xn.is_zero()) {
      f[static_cast<std::size_t>(2 * n - f_start)] = SignedLogValue{};
      continue;
    }
    const bool right_bigger =
        xm.is_zero() || (!xn.is_zero() && log_gap(xn, xm) > 0.0);
    const SignedLogValue& big = right_bigger ? xn : xm;
    const double u = xm.is_zero() ? 0.0 : xm.sign * std::exp(log_gap(xm, big));
    const double v = xn.is_zero() ? 0.0 : xn.sign * std::exp(log_gap(xn, big));
    const double y = (weight(fam, 2 * n - 1) * u + weight(fam, 2 * n) * v) / denom;
    f[static_cast<std::size_t>(2 * n - f_start)] =
        SignedLogValue::from_scaled(y, big.logmag, big.logmag_rest);
  }
  return SignedLogSeq(f_start, std::move(f));
}

double verify_poincare(const JacobiFamily& fam, double lambda,
                       const SignedLogSeq& x) {
  double worst = 0.0;
  for (std::int64_t n = x.first_index() + 1; n < x.last_index(); ++n) {
    const double r = scaled_three_term(1.0, x.at(n + 1),
                                       poincare_F(fam, lambda, n), x.at(n),
                                       poincare_G(fam, lambda, n), x.at(n - 1));
    worst = std::max(worst, r);
  }
  return worst;
}

SignedLogSeq split_x(const SignedLogSeq& f, std::int64_t n_lo, std::int64_t n_hi) {
  std::vector<SignedLogValue> v;
  v.reserve(static_cast<std::size_t>(n_hi - n_lo + 1));
  for (std::int64_t n = n_lo; n <= n_hi; ++n) v.push_back(f.at(2 * n + 1));
  return SignedLogSeq(n_lo, std::move(v));
}

SignedLogSeq split_y(const SignedLogSeq& f, std::int64_t n_lo, std::int64_t n_hi) {
  std::vector<SignedLogValue> v;
  v.reserve(static_cast<std::size_t>(n_hi - n_lo + 1));
  for (std::int64_t n = n_lo; n <= n_hi; ++n) v.push_back(f.at(2 * n));
  return SignedLogSeq(n_lo, std::move(v));
}

}  // namespace jacspec
