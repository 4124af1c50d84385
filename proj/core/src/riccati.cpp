#include "jacspec/riccati.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace jacspec {

double beta(const JacobiFamily& fam, double lambda, std::int64_t n) {
  const double Fn = poincare_F(fam, lambda, n);
  const double Fm = poincare_F(fam, lambda, n - 1);
  if (std::abs(Fn) < 1e-9 || std::abs(Fm) < 1e-9) {
    throw numeric_error("beta: Poincare coefficient F vanishes near n=" +
                        std::to_string(n));
  }
  return 4.0 * poincare_G(fam, lambda, n) / (Fn * Fm) - 1.0;
}

AsymptoticExpansion beta_expansion(const JacobiFamily& fam) {
  if (!fam.critical_boundary()) {
    throw validation_error("beta_expansion: defined only on |c1 - c2| = 1");
  }
  if (!(fam.alpha > 1.0 / 3.0 && fam.alpha < 0.5)) {
    throw validation_error("beta_expansion: derived for alpha in (1/3, 1/2)");
  }
  const double a = fam.alpha;
  const double cc = fam.c1 * fam.c2;
  // exponent order a < 2a < 1 < 3a holds exactly on (1/3, 1/2)
  std::vector<ExpansionTerm> terms;
  terms.push_back(
      {[a, cc](double lam) { return -std::pow(2.0, 1.0 - a) / cc * lam; }, a});
  terms.push_back({[a, cc](double lam) {
                     return std::pow(2.0, -2.0 * a) / cc * (3.0 / cc + 1.0) * lam * lam;
                   },
                   2.0 * a});
  terms.push_back({[a, cc](double) { return a / (2.0 * cc); }, 1.0});
  terms.push_back({[a, cc](double lam) {
                     return -std::pow(2.0, -3.0 * a) / (cc * cc) *
                            (3.0 + 4.0 / cc) * lam * lam * lam;
                   },
                   3.0 * a});
  return AsymptoticExpansion(std::move(terms), 1.0 + a);
}

GammaCoefficients gamma_coefficients(const JacobiFamily& fam, double lambda) {
  if (!fam.critical_boundary()) {
    throw validation_error("gamma_coefficients: defined only on |c1 - c2| = 1");
  }
  const double a = fam.alpha;
  const double cc = fam.c1 * fam.c2;
  return GammaCoefficients{
      -std::pow(2.0, 1.0 - a) * lambda / cc,
      std::pow(2.0, -2.0 * a) * (3.0 / cc + 1.0) * lambda * lambda / cc,
      a * (1.0 + 1.0 / (2.0 * cc)),
      -std::pow(2.0, -3.0 * a) * (3.0 + 4.0 / cc) * lambda * lambda * lambda /
          (cc * cc)};
}

double phi(const JacobiFamily& fam, double lambda, std::int64_t n) {
  const double b = beta(fam, lambda, n);
  if (!(b < 0.0)) {
    throw numeric_error("phi: beta_n >= 0 at n=" + std::to_string(n) +
                        " (below the asymptotic regime for this lambda)");
  }
  return std::sqrt(-b);
}

double riccati_forward_step(double x_prev, double beta_n) {
  if (std::abs(1.0 + x_prev) < 1e-12) {
    throw numeric_error("riccati_forward_step: X = -1 singularity");
  }
  return (1.0 + beta_n) * x_prev / (x_prev + 1.0) - beta_n;
}

double riccati_backward_step(double x_n, double beta_n) {
  if (std::abs(1.0 - x_n) < 1e-12) {
    throw numeric_error("riccati_backward_step: X = 1 singularity");
  }
  return (x_n + beta_n) / (1.0 - x_n);
}

double RiccatiSolution::at(std::int64_t n) const {
  if (n < start_index || n > last_index()) {
    throw validation_error("RiccatiSolution: index " + std::to_string(n) +
                           " outside range");
  }
  return values[static_cast<std::size_t>(n - start_index)];
}

RiccatiSolution x_to_X(const JacobiFamily& fam, double lambda,
                       const SignedLogSeq& x) {
  std::vector<double> vals;
  vals.reserve(x.size() - 1);
  for (std::int64_t n = x.first_index(); n < x.last_index(); ++n) {
    if (x.at(n).is_zero()) {
      throw validation_error("x_to_X: zero x_n at n=" + std::to_string(n));
    }
    const double Fn = poincare_F(fam, lambda, n);
    vals.push_back(-2.0 * x.ratio(n) / Fn - 1.0);
  }
  return RiccatiSolution{x.first_index(), std::move(vals), lambda, std::nullopt};
}

SignedLogSeq x_from_riccati(const JacobiFamily& fam, double lambda,
                            const RiccatiSolution& X) {
  std::vector<SignedLogValue> vals;
  vals.reserve(X.values.size() + 1);
  int sign = 1;
  double hi = 0.0, lo = 0.0;  // compensated running log magnitude
  vals.push_back(SignedLogValue{1, 0.0, 0.0});  // x at the start index is 1
  for (std::int64_t n = X.start_index; n <= X.last_index(); ++n) {
    const double r = -(poincare_F(fam, lambda, n) / 2.0) * (1.0 + X.at(n));
    if (r == 0.0) {
      throw numeric_error("x_from_riccati: vanishing ratio at n=" +
                          std::to_string(n));
    }
    sign *= (r > 0.0) ? 1 : -1;
    double s, e;
    two_sum(hi, std::log(std::abs(r)), s, e);
    hi = s;
    lo += e;
    vals.push_back(SignedLogValue{sign, hi, lo});
  }
  return SignedLogSeq(X.start_index, std::move(vals));
}

double formal_X(const JacobiFamily& fam, double lambda, std::int64_t n,
                Branch branch) {
  const double ph = phi(fam, lambda, n);
  const double signed_phi = branch == Branch::plus ? ph : -ph;
  return signed_phi + fam.alpha / (4.0 * static_cast<double>(n));
}

double riccati_residual(const JacobiFamily& fam, const RiccatiSolution& X) {
  double worst = 0.0;
  for (std::int64_t n = X.start_index + 1; n <= X.last_index(); ++n) {
    const double b = beta(fam, X.lambda, n);
    const double xp = X.at(n - 1);
    const double xn = X.at(n);
    // X_n + X_n X_{n-1} = X_{n-1} - beta_n, the equation cleared of 1 + X_{n-1}
    const double lhs = xn * (1.0 + xp);
    const double rhs = xp - b;
    const double scale = std::max(
        {1.0, std::abs(xn), std::abs(xp), std::abs(xn * xp), std::abs(b)});
    worst = std::max(worst, std::abs(lhs - rhs) / scale);
  }
  return worst;
}

double rectifier_residual(const JacobiFamily& fam, const RiccatiSolution& X) {
  double worst = 0.0;
  for (std::int64_t n = X.start_index + 1; n <= X.last_index(); ++n) {
    const double b = beta(fam, X.lambda, n);
    const double xp = X.at(n - 1);
    const double xn = X.at(n);
    const double lhs = xn * xn + b;
    const double rhs = (xn - 1.0) * (xn - xp);
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  return worst;
}

}  // namespace jacspec
