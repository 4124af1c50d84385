#pragma once

#include <cstdint>

#include "jacspec/family.hpp"
#include "jacspec/signed_log.hpp"

namespace jacspec {

/// Forward solve of b_{n-1} f_{n-1} + q_n f_n + b_n f_{n+1} = lambda f_n from
/// the seed pair (f1, f2) at indices (1, 2) up to n_max. Each step advances a
/// locally rescaled pair; the accumulated scale goes into the log magnitudes.
/// Rejects the zero seed pair.
SignedLogSeq recurrence_forward(const JacobiFamily& fam, double lambda,
                                double f1, double f2, std::int64_t n_max);

/// Forward solution with f1 = 1, f2 = (lambda - q1)/b1, i.e. the first-row
/// boundary condition holds; entry n is a polynomial of degree n-1 in lambda.
SignedLogSeq first_kind_polynomials(const JacobiFamily& fam, double lambda,
                                    std::int64_t n_max);

/// Backward solve from the pair (f_m, f_{m+1}) down to index down_to; the
/// stable direction for decaying solutions. Rejects the zero seed pair.
SignedLogSeq recurrence_backward(const JacobiFamily& fam, double lambda,
                                 std::int64_t m, double f_m, double f_m1,
                                 std::int64_t down_to);

/// Backward solve with a signed-log seed pair (used when the seed already
/// carries a large log scale).
SignedLogSeq recurrence_backward(const JacobiFamily& fam, double lambda,
                                 std::int64_t m, SignedLogValue f_m,
                                 SignedLogValue f_m1, std::int64_t down_to);

/// Max over interior indices of
///   |b_{n-1} f_{n-1} + (q_n - lambda) f_n + b_n f_{n+1}|
/// divided by the largest magnitude of the three terms.
double three_term_residual(const JacobiFamily& fam, double lambda,
                           const SignedLogSeq& f);

/// First-row defect (q1 - lambda) f1 + b1 f2, normalized by max(|f1|, |f2|).
/// Zero (up to tolerance) iff f is a generalized eigenvector.
double boundary_defect(const JacobiFamily& fam, double lambda,
                       const SignedLogSeq& f);

}  // namespace jacspec
