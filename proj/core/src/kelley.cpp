#include "jacspec/kelley.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

namespace jacspec {

BoundParams BoundParams::defaults(double alpha) {
  const double p = alpha / 2.0;
  const double half = p / 2.0;
  return BoundParams{p, 0.7 * half, 1.3 * half, 0.7 * half, 1.3 * half};
}

void BoundParams::validate() const {
  const double half = p / 2.0;
  if (!(a_plus < half && half < a_minus)) {
    throw validation_error("BoundParams: need A+ < p/2 < A-");
  }
  if (!(b_minus < half && half < b_plus)) {
    throw validation_error("BoundParams: need B- < p/2 < B+");
  }
}

namespace {

struct Offsets {
  double A, B;  // this branch's minorant / majorant offsets
  double sgn;   // +1 plus branch, -1 minus branch
};

Offsets offsets_for(const BoundParams& b, Branch branch) {
  if (branch == Branch::plus) return {b.a_plus, b.b_plus, +1.0};
  return {b.a_minus, b.b_minus, -1.0};
}

// Scan one lambda: the last index in [n_lo, lookahead] at which any envelope
// condition fails, plus the name of the condition failing there.
struct ScanResult {
  std::int64_t valid_from;
  std::int64_t last_bad;
  std::string last_bad_condition;
};

ScanResult scan_lambda(const JacobiFamily& fam, double lambda,
                       const Offsets& off, Branch branch, std::int64_t n_lo,
                       std::int64_t lookahead) {
  std::int64_t last_bad = 0;
  std::string why;
  double F_prev = poincare_F(fam, lambda, n_lo - 1);
  bool have_prev = false;
  double v_prev = 0.0, w_prev = 0.0;

  for (std::int64_t n = n_lo; n <= lookahead; ++n) {
    const double F_n = poincare_F(fam, lambda, n);
    const double G_n = poincare_G(fam, lambda, n);
    const double bet = 4.0 * G_n / (F_n * F_prev) - 1.0;
    F_prev = F_n;

    const char* bad = nullptr;
    if (!(bet < 0.0)) {
      bad = "beta_n < 0";
    } else if (!(1.0 + bet >= 0.0)) {
      bad = "1 + beta_n >= 0";
    } else {
      const double ph = std::sqrt(-bet);
      const double v = off.sgn * ph + off.A / static_cast<double>(n);
      const double w = off.sgn * ph + off.B / static_cast<double>(n);
      if (!(1.0 + v > 0.0) || !(1.0 + w > 0.0)) {
        bad = "1 + envelope > 0";
      } else if (branch == Branch::minus &&
                 !(std::abs(v) < 1.0 && std::abs(w) < 1.0)) {
        bad = "|envelope| < 1";
      } else if (have_prev) {
        if (!(v * (1.0 + v_prev) <= v_prev - bet)) {
          bad = "minorant step";
        } else if (!(w * (1.0 + w_prev) >= w_prev - bet)) {
          bad = "majorant step";
        }
      }
      if (bad == nullptr) {
        v_prev = v;
        w_prev = w;
        have_prev = true;
      }
    }
    if (bad != nullptr) {
      last_bad = n;
      why = bad;
      have_prev = false;
    }
  }
  return ScanResult{last_bad == 0 ? n_lo : last_bad + 1, last_bad, why};
}

}  // namespace

EnvelopePair::EnvelopePair(JacobiFamily fam, Branch branch, BoundParams bounds,
                           std::vector<double> lambda_grid,
                           std::vector<std::int64_t> per_lambda_valid_from)
    : fam_(fam),
      branch_(branch),
      bounds_(bounds),
      grid_(std::move(lambda_grid)),
      per_lambda_(std::move(per_lambda_valid_from)) {
  valid_from_ = *std::max_element(per_lambda_.begin(), per_lambda_.end());
}

double EnvelopePair::minorant(double lambda, std::int64_t n) const {
  const auto off = offsets_for(bounds_, branch_);
  return off.sgn * phi(fam_, lambda, n) + off.A / static_cast<double>(n);
}

double EnvelopePair::majorant(double lambda, std::int64_t n) const {
  const auto off = offsets_for(bounds_, branch_);
  return off.sgn * phi(fam_, lambda, n) + off.B / static_cast<double>(n);
}

EnvelopePair envelopes(const JacobiFamily& fam, std::vector<double> lambda_grid,
                       const BoundParams& bounds, Branch branch,
                       const EnvelopeScanOptions& options) {
  bounds.validate();
  if (lambda_grid.empty()) {
    throw validation_error("envelopes: empty lambda grid");
  }
  const double hi = *std::max_element(lambda_grid.begin(), lambda_grid.end());
  const double lo = *std::min_element(lambda_grid.begin(), lambda_grid.end());
  const SpectralWindow window = SpectralWindow::make(lo, hi);
  const auto off = offsets_for(bounds, branch);

  std::vector<std::int64_t> per_lambda;
  per_lambda.reserve(lambda_grid.size());
  for (double lam : lambda_grid) {
    const std::int64_t n_lo =
        min_index_N(SpectralWindow::make(lam, lam), fam.alpha) + 1;
    const auto res =
        scan_lambda(fam, lam, off, branch, n_lo, options.lookahead);
    if (res.valid_from > options.scan_cap) {
      throw numeric_error(
          "envelopes: no valid start index <= " +
          std::to_string(options.scan_cap) + " at lambda=" +
          std::to_string(lam) + "; condition '" + res.last_bad_condition +
          "' still fails at n=" + std::to_string(res.last_bad));
    }
    per_lambda.push_back(res.valid_from);
  }
  (void)window;
  return EnvelopePair(fam, branch, bounds, std::move(lambda_grid),
                      std::move(per_lambda));
}

TrappingReport verify_trapping(const EnvelopePair& env,
                               const RiccatiSolution& sol) {
  const std::int64_t from = std::max(env.valid_from(), sol.start_index);
  if (from > sol.last_index()) {
    throw validation_error("verify_trapping: no overlap past valid_from");
  }
  double worst = -std::numeric_limits<double>::infinity();
  std::int64_t worst_n = from;
  const bool plus = env.branch() == Branch::plus;
  for (std::int64_t n = from; n <= sol.last_index(); ++n) {
    const double v = env.minorant(sol.lambda, n);
    const double w = env.majorant(sol.lambda, n);
    const double x = sol.at(n);
    // positive excess outside the branch-appropriate sandwich
    const double excess = plus ? std::max(v - x, x - w) : std::max(w - x, x - v);
    if (excess > worst) {
      worst = excess;
      worst_n = n;
    }
  }
  return TrappingReport{worst <= 0.0, worst, worst_n};
}

RiccatiSolution growing_riccati(const JacobiFamily& fam, double lambda,
                                const BoundParams& bounds, std::int64_t N,
                                std::int64_t n_max) {
  bounds.validate();
  if (n_max <= N) throw validation_error("growing_riccati: n_max must exceed N");
  std::vector<double> vals;
  vals.reserve(static_cast<std::size_t>(n_max - N + 1));
  double x = phi(fam, lambda, N) +
             0.5 * (bounds.a_plus + bounds.b_plus) / static_cast<double>(N);
  vals.push_back(x);
  double F_prev = poincare_F(fam, lambda, N);
  for (std::int64_t n = N + 1; n <= n_max; ++n) {
    const double F_n = poincare_F(fam, lambda, n);
    const double bet = 4.0 * poincare_G(fam, lambda, n) / (F_n * F_prev) - 1.0;
    F_prev = F_n;
    x = riccati_forward_step(x, bet);
    vals.push_back(x);
  }
  return RiccatiSolution{N, std::move(vals), lambda, Branch::plus};
}

BackwardLimit decaying_riccati(const JacobiFamily& fam, double lambda,
                               const BoundParams& bounds,
                               std::span<const std::int64_t> s_list,
                               std::int64_t N) {
  bounds.validate();
  if (s_list.empty()) throw validation_error("decaying_riccati: empty s list");
  for (std::size_t i = 0; i < s_list.size(); ++i) {
    if (s_list[i] <= N || (i > 0 && s_list[i] <= s_list[i - 1])) {
      throw validation_error(
          "decaying_riccati: s_list must be increasing with every s > N");
    }
  }

  auto run = [&](std::int64_t s) {
    std::vector<double> vals(static_cast<std::size_t>(s - N + 1));
    double x = -phi(fam, lambda, s) + bounds.b_minus / static_cast<double>(s);
    vals.back() = x;
    double F_n = poincare_F(fam, lambda, s);
    for (std::int64_t n = s; n > N; --n) {
      const double F_m = poincare_F(fam, lambda, n - 1);
      const double bet = 4.0 * poincare_G(fam, lambda, n) / (F_n * F_m) - 1.0;
      F_n = F_m;
      x = riccati_backward_step(x, bet);
      vals[static_cast<std::size_t>(n - 1 - N)] = x;
    }
    return vals;
  };

  std::vector<double> prev = run(s_list[0]);
  double certificate = std::numeric_limits<double>::quiet_NaN();
  for (std::size_t i = 1; i < s_list.size(); ++i) {
    std::vector<double> cur = run(s_list[i]);
    const std::int64_t s_prev = s_list[i - 1];
    // the run at s_prev is pinned to w at its seed; compare below the
    // boundary layer, where both runs have contracted onto the limit
    const std::size_t certified =
        static_cast<std::size_t>(std::max<std::int64_t>(1, (9 * s_prev) / 10 - N));
    double diff = 0.0;
    for (std::size_t k = 0; k < prev.size(); ++k) {
      const double d = cur[k] - prev[k];
      if (d < -1e-12) {
        throw numeric_error(
            "decaying_riccati: backward limit not monotone in s at n=" +
            std::to_string(N + static_cast<std::int64_t>(k)));
      }
      if (k < certified) diff = std::max(diff, std::abs(d));
    }
    certificate = diff;
    prev = std::move(cur);
  }
  return BackwardLimit{
      RiccatiSolution{N, std::move(prev), lambda, Branch::minus}, certificate};
}

}  // namespace jacspec
