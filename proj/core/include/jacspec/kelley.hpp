#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "jacspec/family.hpp"
#include "jacspec/riccati.hpp"

namespace jacspec {

/// Envelope offsets around p/2 = alpha/4. The minorant offsets A straddle
/// p/2 from below (plus branch) and above (minus branch); likewise the
/// majorant offsets B with roles swapped.
struct BoundParams {
  double p;  // alpha/2
  double a_plus, a_minus, b_minus, b_plus;

  /// Offsets 0.7 (p/2) and 1.3 (p/2). The 30% margin beats the slow n^{-a/2}
  /// corrections of the Riccati orbits by n ~ 3000 on desk-scale windows;
  /// 10% margins would not trap before n ~ 1e5.
  static BoundParams defaults(double alpha);

  /// Enforces A+ < p/2 < A- and B- < p/2 < B+.
  void validate() const;
};

struct EnvelopeScanOptions {
  std::int64_t scan_cap = 10'000;    // largest admissible valid_from
  std::int64_t lookahead = 100'000;  // inequalities verified through this index
};

/// Minorant/majorant pair v_n = ±phi_n + A/n, w_n = ±phi_n + B/n with a
/// uniform starting index: from valid_from on, every one-step envelope
/// inequality holds at every grid point.
class EnvelopePair {
 public:
  EnvelopePair(JacobiFamily fam, Branch branch, BoundParams bounds,
               std::vector<double> lambda_grid,
               std::vector<std::int64_t> per_lambda_valid_from);

  double minorant(double lambda, std::int64_t n) const;  // v_n
  double majorant(double lambda, std::int64_t n) const;  // w_n

  Branch branch() const { return branch_; }
  const BoundParams& bounds() const { return bounds_; }
  std::int64_t valid_from() const { return valid_from_; }
  const std::vector<double>& lambda_grid() const { return grid_; }
  const std::vector<std::int64_t>& per_lambda_valid_from() const {
    return per_lambda_;
  }

 private:
  JacobiFamily fam_;
  Branch branch_;
  BoundParams bounds_;
  std::vector<double> grid_;
  std::vector<std::int64_t> per_lambda_;
  std::int64_t valid_from_;
};

/// Scans for the smallest N from which all envelope inequalities hold out to
/// options.lookahead, per grid point, and takes the max. Throws numeric_error
/// naming the first failing inequality when no N <= scan_cap works.
EnvelopePair envelopes(const JacobiFamily& fam, std::vector<double> lambda_grid,
                       const BoundParams& bounds, Branch branch,
                       const EnvelopeScanOptions& options = {});

struct TrappingReport {
  bool trapped;
  double max_violation;  // <= 0 when trapped
  std::int64_t worst_index;
};

/// Checks the branch-appropriate sandwich (v <= X <= w on the plus branch,
/// w <= X <= v on the minus branch) at every overlapping index past
/// valid_from.
TrappingReport verify_trapping(const EnvelopePair& env,
                               const RiccatiSolution& sol);

/// Forward orbit seeded at the envelope midpoint (v_N + w_N)/2, carried to
/// n_max. Plus branch.
RiccatiSolution growing_riccati(const JacobiFamily& fam, double lambda,
                                const BoundParams& bounds, std::int64_t N,
                                std::int64_t n_max);

struct BackwardLimit {
  RiccatiSolution solution;  // run at the largest s
  // sup distance between the last two runs over [N, 0.9 s_prev]; the strip
  // near the seed is excluded (the shorter run is pinned to w there)
  double convergence_certificate;
};

/// Minus-branch orbit by backward limit: for each s in s_list, seed
/// X_{s,s} = w_s and recurse down to N; runs must be non-decreasing in s
/// (within 1e-12). s_list must be increasing with each s > N.
BackwardLimit decaying_riccati(const JacobiFamily& fam, double lambda,
                               const BoundParams& bounds,
                               std::span<const std::int64_t> s_list,
                               std::int64_t N);

}  // namespace jacspec
