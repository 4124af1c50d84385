#pragma once

#include <cstdint>

#include "jacspec/errors.hpp"

namespace jacspec {

// Tolerance for membership on the measure-zero phase boundaries. Callers
// probing a boundary are expected to pass c1, c2 satisfying the boundary
// identity exactly; the tolerance only absorbs representation noise.
inline constexpr double kBoundaryTol = 1e-12;

/// Two-parameter family with off-diagonal b_n = n^alpha c_n (c_n alternating
/// between c1 at odd and c2 at even n) and diagonal q_n = n^alpha.
struct JacobiFamily {
  double c1;
  double c2;
  double alpha;

  /// Validates c1, c2 > 0 and alpha in (1/3, 1/2). The experimental range
  /// alpha in (0, 1) is admitted only with extended_alpha = true; the
  /// asymptotic expansions stay restricted to (1/3, 1/2) either way.
  static JacobiFamily make(double c1, double c2, double alpha,
                           bool extended_alpha = false);

  /// True when |c1 - c2| = 1 within kBoundaryTol.
  bool critical_boundary() const;
};

/// Off-diagonal entry b_n.
double weight(const JacobiFamily& fam, std::int64_t n);

/// Diagonal entry q_n = n^alpha.
double diagonal(const JacobiFamily& fam, std::int64_t n);

/// Bounded spectral-parameter interval separated from zero. A degenerate
/// window with lo == hi is allowed (single-point probes).
struct SpectralWindow {
  double lo;
  double hi;

  static SpectralWindow make(double lo, double hi);
};

enum class PhaseTag {
  absolutely_continuous,
  discrete,
  boundary_easy,      // c1 + c2 = 1
  boundary_critical,  // |c1 - c2| = 1
};

const char* to_string(PhaseTag tag);

struct PhaseRegion {
  PhaseTag tag;
  double discriminant;  // |c1^2 + c2^2 - 1| / (c1 c2)
};

/// Places (c1, c2) in the phase plane: discriminant < 2 is purely absolutely
/// continuous spectrum, > 2 is discrete, = 2 splits into the two boundary
/// lines. Symmetric under swapping c1 and c2.
PhaseRegion phase_classify(double c1, double c2);

struct CarlemanReport {
  bool analytic_verdict;  // true iff sum 1/b_n diverges (b_n ~ n^alpha, alpha < 1)
  double partial_sum;     // sum of 1/b_n over the first n_terms entries
};

/// Self-adjointness witness: the Carleman series diverges for this family.
CarlemanReport carleman_check(const JacobiFamily& fam, std::int64_t n_terms);

}  // namespace jacspec
