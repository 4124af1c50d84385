#pragma once

#include <cstdint>

#include "jacspec/expansion.hpp"
#include "jacspec/family.hpp"
#include "jacspec/signed_log.hpp"

namespace jacspec {

/// Smallest index N such that q_{2n} lies strictly above the window for all
/// n >= N; from there the even-decimated coefficients F_n, G_n are regular.
std::int64_t min_index_N(const SpectralWindow& window, double alpha);

/// Coefficients of the decimated second-order equation
///   x_{n+1} + F_n x_n + G_n x_{n-1} = 0,  x_n = f_{2n+1}.
/// Both reject q_{2n} <= lambda (index below the admissible range).
double poincare_F(const JacobiFamily& fam, double lambda, std::int64_t n);
double poincare_G(const JacobiFamily& fam, double lambda, std::int64_t n);

// Building blocks of F: F = (c2/c1) A - B/(c1 c2) + (c1/c2) C, and
// G = A ((2n-1)/(2n))^alpha.
double coeff_A(const JacobiFamily& fam, double lambda, std::int64_t n);
double coeff_B(const JacobiFamily& fam, double lambda, std::int64_t n);
double coeff_C(const JacobiFamily& fam, std::int64_t n);

/// F_n = 2 + 2^{1-a} lambda/(c1 c2) n^{-a} - 2^{-2a} lambda^2/(c1 c2) n^{-2a}
///       - a (1 + 1/(2 c1 c2)) n^{-1} + O(n^{-1-a}).
/// Defined only on the critical boundary |c1 - c2| = 1.
AsymptoticExpansion F_expansion(const JacobiFamily& fam);

/// G_n = 1 - a n^{-1} + O(n^{-1-a}); same boundary restriction.
AsymptoticExpansion G_expansion(const JacobiFamily& fam);

/// Rebuilds a full solution f of the original recurrence from its odd
/// subsequence x_n = f_{2n+1}: the even entries come from the exact coupling
///   y_n = (b_{2n-1} x_{n-1} + b_{2n} x_n) / (lambda - q_{2n}).
/// Rejects |lambda - q_{2n}| below 1e-12 relative (caller misuse; the
/// admissible index range excludes the singularity).
SignedLogSeq reconstruct_f_from_x(const JacobiFamily& fam, double lambda,
                                  const SignedLogSeq& x);

/// Max scaled residual of x_{n+1} + F_n x_n + G_n x_{n-1} = 0 over the range.
double verify_poincare(const JacobiFamily& fam, double lambda,
                       const SignedLogSeq& x);

/// Odd subsequence x_n = f_{2n+1} for n in [n_lo, n_hi].
SignedLogSeq split_x(const SignedLogSeq& f, std::int64_t n_lo, std::int64_t n_hi);

/// Even subsequence y_n = f_{2n} for n in [n_lo, n_hi].
SignedLogSeq split_y(const SignedLogSeq& f, std::int64_t n_lo, std::int64_t n_hi);

}  // namespace jacspec
