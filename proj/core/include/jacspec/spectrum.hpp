#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "jacspec/family.hpp"
#include "jacspec/kelley.hpp"
#include "jacspec/signed_log.hpp"

namespace jacspec {

/// Number of eigenvalues of the K x K leading section strictly below lambda,
/// via the sign count of the shifted LDL^T pivots (with the usual tiny-pivot
/// replacement).
std::int64_t sturm_count(const JacobiFamily& fam, std::int64_t K, double lambda);

struct TruncationSpectrum {
  std::int64_t K;
  std::vector<double> eigenvalues;  // ascending, inside the window
  double bracket_width;
  bool bracket_audit;  // every eigenvalue isolated in its own unit-count bracket
};

/// All eigenvalues of the K x K section inside the window, each bracketed by
/// Sturm bisection to bracket_tol.
TruncationSpectrum truncate_eigenvalues(const JacobiFamily& fam, std::int64_t K,
                                        const SpectralWindow& window,
                                        double bracket_tol = 1e-11);

/// Construction depths for the decaying solution: start index N (envelope
/// validity) and backward seed depth s.
struct ShootingDepths {
  std::int64_t N;
  std::int64_t s;
  BoundParams bounds;
};

/// N from the minus-branch envelope scan over a grid on the window (at least
/// min_index_N), s = max(4N, s_floor).
ShootingDepths default_depths(const JacobiFamily& fam,
                              const SpectralWindow& window, int grid_points,
                              const BoundParams& bounds,
                              std::int64_t s_floor = 2000);

/// Normalized first-row defect W(lambda) of the constructed decaying
/// solution; W vanishes exactly at eigenvalues.
double shooting_mismatch(const JacobiFamily& fam, double lambda, std::int64_t s,
                         std::int64_t N, const BoundParams& bounds);

/// Full decaying solution on [1, ~n_len]: backward-limit Riccati orbit,
/// ratio inversion, even-row reconstruction, backward extension to index 1.
SignedLogSeq decaying_solution(const JacobiFamily& fam, double lambda,
                               std::int64_t s, std::int64_t N,
                               const BoundParams& bounds, std::int64_t n_len);

/// Sign-change brackets of W over a uniform grid on the window.
std::vector<std::pair<double, double>> shooting_brackets(
    const JacobiFamily& fam, const SpectralWindow& window, int grid_points,
    std::int64_t s, std::int64_t N, const BoundParams& bounds);

struct EigenpairEstimate {
  double lambda0;
  SignedLogSeq eigvec;          // unit l2 norm, indices from 1
  double recurrence_residual;   // scaled three-term residual
  double boundary_residual;     // |W(lambda0)|
  double decay_slope;           // fitted slope of log|f_n| vs n^{1-alpha/2}
  double predicted_slope;       // -sqrt(lambda0/(2 c1 c2)) / (1 - alpha/2)
  double prop_constant;         // C with f* = C f^- (unit-norm f^-)
  double prop_spread;           // relative spread of f*_n / f^-_n over n <= 50
};

/// Bisection on W over [lambda_a, lambda_b] (requires a sign change) to width
/// bracket_tol, followed by a quad-precision polish; assembles and certifies
/// the eigenvector out to index >= n_len.
EigenpairEstimate eigenvalue_refine(const JacobiFamily& fam, double lambda_a,
                                    double lambda_b, std::int64_t s,
                                    std::int64_t N, const BoundParams& bounds,
                                    std::int64_t n_len = 100'000,
                                    double bracket_tol = 1e-11);

/// Per-index ratio statistics of the first-kind polynomials against the
/// constructed decaying head at a fixed lambda, both evaluated in quad
/// precision (no refinement). At an eigenvalue known to quad accuracy the
/// spread collapses to rounding level; at any other lambda the growing
/// admixture makes it large.
struct ProportionalityProbe {
  double c_value;
  double spread;
};
ProportionalityProbe proportionality_probe(const JacobiFamily& fam,
                                           double lambda, std::int64_t N,
                                           const BoundParams& bounds);

struct DecayFit {
  double fitted;
  double predicted;
  double ratio;
};

/// Least-squares slope of log|f_n| against n^{1-alpha/2} over [fit_lo, fit_hi].
DecayFit decay_rate_fit(const EigenpairEstimate& est, const JacobiFamily& fam,
                        std::int64_t fit_lo = 1'000,
                        std::int64_t fit_hi = 100'000);

struct SpacingEntry {
  std::int64_t K;
  std::int64_t count;
  double min_gap;  // +inf when fewer than two eigenvalues
  bool bracket_audit;
};

/// Eigenvalue count and minimum nearest-neighbor gap in the window for each
/// section size; a discreteness witness when both stabilize as K grows.
std::vector<SpacingEntry> spacing_report(const JacobiFamily& fam,
                                         const SpectralWindow& window,
                                         std::span<const std::int64_t> K_list);

}  // namespace jacspec
