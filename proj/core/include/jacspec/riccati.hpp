#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "jacspec/expansion.hpp"
#include "jacspec/family.hpp"
#include "jacspec/poincare.hpp"
#include "jacspec/signed_log.hpp"

namespace jacspec {

/// beta_n = 4 G_n / (F_n F_{n-1}) - 1, the coefficient of the Riccati form.
double beta(const JacobiFamily& fam, double lambda, std::int64_t n);

/// beta_n = -2^{1-a} lambda/(c1c2) n^{-a}
///          + 2^{-2a}/(c1c2) (3/(c1c2) + 1) lambda^2 n^{-2a}
///          + a/(2 c1c2) n^{-1}
///          - 2^{-3a}/(c1c2)^2 (3 + 4/(c1c2)) lambda^3 n^{-3a} + O(n^{-1-a}).
/// Critical boundary only. Terms are ordered by exponent (a < 2a < 1 < 3a).
AsymptoticExpansion beta_expansion(const JacobiFamily& fam);

/// Coefficients of 4/(F_n F_{n-1}) = 1 + g1 n^{-a} + g2 n^{-2a} + g3 n^{-1}
/// + g4 n^{-3a} + O(n^{-1-a}).
struct GammaCoefficients {
  double g1, g2, g3, g4;
};
GammaCoefficients gamma_coefficients(const JacobiFamily& fam, double lambda);

/// phi_n = sqrt(-beta_n); requires beta_n < 0 (signals the pre-asymptotic
/// regime otherwise).
double phi(const JacobiFamily& fam, double lambda, std::int64_t n);

/// One step of X_n = (1 + beta_n) X_{n-1}/(X_{n-1} + 1) - beta_n.
double riccati_forward_step(double x_prev, double beta_n);

/// Inverse step X_{n-1} = (X_n + beta_n)/(1 - X_n).
double riccati_backward_step(double x_n, double beta_n);

enum class Branch { plus, minus };

/// Orbit of the Riccati equation at a fixed spectral parameter. The branch is
/// set by the envelope-based constructors; orbits derived from arbitrary
/// linear solutions leave it empty.
struct RiccatiSolution {
  std::int64_t start_index;
  std::vector<double> values;
  double lambda;
  std::optional<Branch> branch;

  std::int64_t last_index() const {
    return start_index + static_cast<std::int64_t>(values.size()) - 1;
  }
  double at(std::int64_t n) const;
};

/// X_n = -2 x_{n+1} / (F_n x_n) - 1 computed from log-ratios of x, so the
/// stretched-exponential size of x never materializes. Rejects zero x_n.
RiccatiSolution x_to_X(const JacobiFamily& fam, double lambda,
                       const SignedLogSeq& x);

/// Ratio inversion: x with x_{n+1}/x_n = -(F_n/2)(1 + X_n), x_start = 1,
/// on indices [X.start_index, X.last_index()+1].
SignedLogSeq x_from_riccati(const JacobiFamily& fam, double lambda,
                            const RiccatiSolution& X);

/// Formal two-term asymptotics ±sqrt(-beta_n) + alpha/(4n).
double formal_X(const JacobiFamily& fam, double lambda, std::int64_t n,
                Branch branch);

/// Max scaled residual of X_n (1 + X_{n-1}) = X_{n-1} - beta_n over the
/// orbit (the Riccati equation cleared of its denominator).
double riccati_residual(const JacobiFamily& fam, const RiccatiSolution& X);

/// Max |X_n^2 + beta_n - (X_n - 1)(X_n - X_{n-1})| over the orbit; the two
/// sides agree exactly on any Riccati orbit.
double rectifier_residual(const JacobiFamily& fam, const RiccatiSolution& X);

}  // namespace jacspec
