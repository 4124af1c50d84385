#include "jacspec/spectrum.hpp"

#include <quadmath.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "jacspec/fit.hpp"
#include "jacspec/poincare.hpp"
#include "jacspec/recurrence.hpp"
#include "jacspec/riccati.hpp"

namespace jacspec {

namespace {

int sgn(double x) { return (x > 0.0) - (x < 0.0); }

// ---------------------------------------------------------------------------
// Scalar-generic shooting chain. The double instantiation would overflow for
// deep starts, so the public double path goes through the signed-log
// machinery instead; the __float128 instantiation runs raw (its exponent
// range absorbs exp(C n^{0.8}) for every desk-scale depth) and is used for
// the eigenvalue polish and the small-n eigenvector head.
// ---------------------------------------------------------------------------

template <typename T>
struct ops;

template <>
struct ops<__float128> {
  static __float128 pow(__float128 a, __float128 b) { return powq(a, b); }
  static __float128 fabs(__float128 a) { return fabsq(a); }
  static __float128 sqrt(__float128 a) { return sqrtq(a); }
};

template <typename T>
struct Entries {
  T c1, c2, alpha;

  T b(std::int64_t n) const {
    return ops<T>::pow(T(n), alpha) * (n % 2 ? c1 : c2);
  }
  T q(std::int64_t n) const { return ops<T>::pow(T(n), alpha); }

  T F(T lam, std::int64_t n) const {
    const T q2n = q(2 * n), q2n1 = q(2 * n + 1), q2n2 = q(2 * n + 2);
    const T b2n = b(2 * n), b2n1 = b(2 * n + 1), b2n2 = b(2 * n + 2);
    return (q2n2 - lam) * b2n * b2n / ((q2n - lam) * b2n1 * b2n2) -
           (q2n1 - lam) * (q2n2 - lam) / (b2n1 * b2n2) + b2n1 / b2n2;
  }
  T G(T lam, std::int64_t n) const {
    return (q(2 * n + 2) - lam) * b(2 * n - 1) * b(2 * n) /
           ((q(2 * n) - lam) * b(2 * n + 1) * b(2 * n + 2));
  }
};

// Decaying solution on [1, n_len] as raw T values, plus the first-row defect.
template <typename T>
struct RawShoot {
  T defect;
  std::vector<T> f;  // f[i] holds index i+1, i in [0, n_len)
};

template <typename T>
RawShoot<T> raw_shoot(const Entries<T>& e, T lam, std::int64_t s,
                      std::int64_t N, T b_minus_offset, std::int64_t n_len) {
  const std::int64_t M =
      std::max<std::int64_t>(N + 1, n_len / 2 + 1);  // x needed on [N, M+1]
  if (s <= M + 1) {
    throw validation_error("raw_shoot: backward depth s too small");
  }

  // backward Riccati orbit, keeping X on [N, M+1]
  std::vector<T> X(static_cast<std::size_t>(M + 2 - N));
  {
    const T bet_s = 4 * e.G(lam, s) / (e.F(lam, s) * e.F(lam, s - 1)) - 1;
    T x = -ops<T>::sqrt(-bet_s) + b_minus_offset / T(s);
    T F_n = e.F(lam, s);
    for (std::int64_t n = s; n > N; --n) {
      const T F_m = e.F(lam, n - 1);
      const T bet = 4 * e.G(lam, n) / (F_n * F_m) - 1;
      F_n = F_m;
      x = (x + bet) / (1 - x);
      if (n - 1 <= M + 1) X[static_cast<std::size_t>(n - 1 - N)] = x;
    }
  }

  // x on [N, M+1] by ratio inversion, x_N = 1
  std::vector<T> xs(static_cast<std::size_t>(M + 2 - N));
  xs[0] = T(1);
  for (std::int64_t n = N; n <= M; ++n) {
    const T r = -(e.F(lam, n) / 2) * (1 + X[static_cast<std::size_t>(n - N)]);
    xs[static_cast<std::size_t>(n + 1 - N)] = xs[static_cast<std::size_t>(n - N)] * r;
  }

  const std::int64_t top = 2 * M + 3;
  std::vector<T> f(static_cast<std::size_t>(top), T(0));
  auto put = [&](std::int64_t idx, T v) {
    if (idx >= 1 && idx <= top) f[static_cast<std::size_t>(idx - 1)] = v;
  };
  for (std::int64_t n = N; n <= M + 1; ++n) {
    put(2 * n + 1, xs[static_cast<std::size_t>(n - N)]);
  }
  for (std::int64_t n = N + 1; n <= M + 1; ++n) {
    const T y = (e.b(2 * n - 1) * xs[static_cast<std::size_t>(n - 1 - N)] +
                 e.b(2 * n) * xs[static_cast<std::size_t>(n - N)]) /
                (lam - e.q(2 * n));
    put(2 * n, y);
  }
  // backward extension from (f_{2N+1}, f_{2N+2}) down to 1
  T g_lo = xs[0];
  T g_hi = f[static_cast<std::size_t>(2 * N + 1)];
  for (std::int64_t m = 2 * N + 1; m > 1; --m) {
    const T g_prev = ((lam - e.q(m)) * g_lo - e.b(m) * g_hi) / e.b(m - 1);
    g_hi = g_lo;
    g_lo = g_prev;
    put(m - 1, g_lo);
  }
  const T f1 = f[0], f2 = f[1];
  const T scale = ops<T>::fabs(f1) > ops<T>::fabs(f2) ? ops<T>::fabs(f1)
                                                      : ops<T>::fabs(f2);
  const T defect = ((e.q(1) - lam) * f1 + e.b(1) * f2) / scale;
  f.resize(static_cast<std::size_t>(std::min(top, n_len)));
  return RawShoot<T>{defect, std::move(f)};
}

struct QuadPolish {
  __float128 lambda;
  double c_value;
  double spread;
};

// ratio statistics of the first-kind head against the decaying head, both in
// quad at the given (quad) spectral parameter
QuadPolish head_stats(const Entries<__float128>& e, __float128 lam0,
                      std::int64_t s_q, std::int64_t N, __float128 off) {
  constexpr std::int64_t kHead = 256;
  constexpr std::int64_t kRatio = 50;
  const auto minus = raw_shoot<__float128>(e, lam0, s_q, N, off, kHead);
  std::vector<__float128> star(kHead);
  star[0] = 1;
  star[1] = (lam0 - e.q(1)) / e.b(1);
  for (std::int64_t n = 2; n < kHead; ++n) {
    star[static_cast<std::size_t>(n)] =
        ((lam0 - e.q(n)) * star[static_cast<std::size_t>(n - 1)] -
         e.b(n - 1) * star[static_cast<std::size_t>(n - 2)]) /
        e.b(n);
  }
  __float128 nrm2 = 0;
  for (std::int64_t i = 0; i < kHead; ++i) {
    nrm2 += minus.f[static_cast<std::size_t>(i)] * minus.f[static_cast<std::size_t>(i)];
  }
  const __float128 nrm = sqrtq(nrm2);

  std::vector<double> ratios(kRatio);
  for (std::int64_t i = 0; i < kRatio; ++i) {
    ratios[static_cast<std::size_t>(i)] = static_cast<double>(
        star[static_cast<std::size_t>(i)] / minus.f[static_cast<std::size_t>(i)] * nrm);
  }
  std::vector<double> sorted = ratios;
  std::sort(sorted.begin(), sorted.end());
  const double median = sorted[sorted.size() / 2];
  const double spread = (sorted.back() - sorted.front()) / std::abs(median);
  return QuadPolish{lam0, median, spread};
}

// Safeguarded bisection in quad precision on a bracket straddling the root,
// then proportionality of the first-kind polynomials against the decaying
// head at the polished parameter.
QuadPolish quad_polish(const JacobiFamily& fam, double la, double lb,
                       std::int64_t N, double b_minus_offset) {
  const Entries<__float128> e{fam.c1, fam.c2, fam.alpha};
  const std::int64_t s_q = std::max<std::int64_t>(4 * N, 512);
  const __float128 off = b_minus_offset;
  auto W = [&](__float128 lam) {
    return raw_shoot<__float128>(e, lam, s_q, N, off, 2).defect;
  };

  __float128 qa = la, qb = lb;
  __float128 Wa = W(qa), Wb = W(qb);
  if (Wa != 0 && Wb != 0 && (Wa > 0) == (Wb > 0)) {
    // root can sit within noise of an endpoint of the double bracket
    const __float128 pad = (qb - qa) * 256 + __float128(1e-9);
    qa -= pad;
    qb += pad;
    Wa = W(qa);
    Wb = W(qb);
  }
  if (Wa == 0) qb = qa;
  else if (Wb == 0) qa = qb;
  else {
    if ((Wa > 0) == (Wb > 0)) {
      throw numeric_error("quad_polish: bracket lost at quad precision");
    }
    const __float128 eps = FLT128_EPSILON;
    for (int it = 0; it < 140 && qb - qa > 8 * eps * qb; ++it) {
      const __float128 mid = (qa + qb) / 2;
      const __float128 Wm = W(mid);
      if (Wm == 0) { qa = qb = mid; break; }
      if ((Wm > 0) == (Wa > 0)) { qa = mid; Wa = Wm; }
      else { qb = mid; Wb = Wm; }
    }
  }
  const __float128 lam0 = (qa + qb) / 2;
  return head_stats(e, lam0, s_q, N, off);
}

}  // namespace

std::int64_t sturm_count(const JacobiFamily& fam, std::int64_t K, double lambda) {
  if (K < 1) throw validation_error("sturm_count: K must be >= 1");
  // pivmin as in the classic bisection codes: safe minimum times max b^2
  double bmax2 = 1.0;
  std::int64_t count = 0;
  double d = diagonal(fam, 1) - lambda;
  double b_prev = 0.0;
  for (std::int64_t i = 1;; ++i) {
    if (std::abs(d) < std::numeric_limits<double>::min() * bmax2) {
      d = -std::numeric_limits<double>::min() * bmax2;
    }
    if (d < 0.0) ++count;
    if (i == K) break;
    b_prev = weight(fam, i);
    bmax2 = std::max(bmax2, b_prev * b_prev);
    d = (diagonal(fam, i + 1) - lambda) - b_prev * b_prev / d;
  }
  return count;
}

TruncationSpectrum truncate_eigenvalues(const JacobiFamily& fam, std::int64_t K,
                                        const SpectralWindow& window,
                                        double bracket_tol) {
  if (K < 2) throw validation_error("truncate_eigenvalues: K must be >= 2");

  std::vector<double> q(static_cast<std::size_t>(K)),
      b(static_cast<std::size_t>(K));
  for (std::int64_t i = 1; i <= K; ++i) {
    q[static_cast<std::size_t>(i - 1)] = diagonal(fam, i);
    b[static_cast<std::size_t>(i - 1)] = weight(fam, i);  // b[K-1] unused
  }
  double gersh_hi = q[0] + b[0];
  for (std::int64_t i = 1; i < K; ++i) {
    gersh_hi = std::max(gersh_hi,
                        q[static_cast<std::size_t>(i)] +
                            b[static_cast<std::size_t>(i - 1)] +
                            (i + 1 < K ? b[static_cast<std::size_t>(i)] : 0.0));
  }
  if (!(window.hi < gersh_hi)) {
    throw validation_error(
        "truncate_eigenvalues: window exceeds the Gershgorin range of the section");
  }

  double bmax2 = 1.0;
  for (std::int64_t i = 0; i + 1 < K; ++i) {
    bmax2 = std::max(bmax2, b[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(i)]);
  }
  const double pivmin = std::numeric_limits<double>::min() * bmax2;
  auto count = [&](double lam) {
    std::int64_t c = 0;
    double d = q[0] - lam;
    for (std::int64_t i = 0;; ++i) {
      if (std::abs(d) < pivmin) d = -pivmin;
      if (d < 0.0) ++c;
      if (i + 1 == K) break;
      const double bi = b[static_cast<std::size_t>(i)];
      d = (q[static_cast<std::size_t>(i + 1)] - lam) - bi * bi / d;
    }
    return c;
  };

  const std::int64_t c_lo = count(window.lo);
  const std::int64_t c_hi = count(window.hi);

  std::vector<double> evs;
  bool audit = true;
  std::vector<std::pair<double, double>> brackets;
  for (std::int64_t j = c_lo + 1; j <= c_hi; ++j) {
    double a = window.lo, bb = window.hi;
    while (bb - a > bracket_tol) {
      const double mid = 0.5 * (a + bb);
      if (count(mid) >= j) bb = mid;
      else a = mid;
    }
    evs.push_back(0.5 * (a + bb));
    brackets.emplace_back(a, bb);
    if (count(bb) - count(a) != 1) audit = false;
  }
  for (std::size_t i = 1; i < evs.size(); ++i) {
    if (evs[i] - evs[i - 1] < 10.0 * bracket_tol) audit = false;
  }
  return TruncationSpectrum{K, std::move(evs), bracket_tol, audit};
}

ShootingDepths default_depths(const JacobiFamily& fam,
                              const SpectralWindow& window, int grid_points,
                              const BoundParams& bounds, std::int64_t s_floor) {
  if (grid_points < 1) throw validation_error("default_depths: empty grid");
  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(grid_points));
  for (int i = 0; i < grid_points; ++i) {
    grid.push_back(grid_points == 1
                       ? window.lo
                       : window.lo + (window.hi - window.lo) * i / (grid_points - 1));
  }
  const auto env = envelopes(fam, std::move(grid), bounds, Branch::minus);
  const std::int64_t N =
      std::max(min_index_N(window, fam.alpha) + 1, env.valid_from());
  return ShootingDepths{N, std::max<std::int64_t>(4 * N, s_floor), bounds};
}

double shooting_mismatch(const JacobiFamily& fam, double lambda, std::int64_t s,
                         std::int64_t N, const BoundParams& bounds) {
  const std::int64_t s_list[1] = {s};
  const auto limit = decaying_riccati(fam, lambda, bounds, s_list, N);
  const double XN = limit.solution.at(N);
  const double xN1 = -(poincare_F(fam, lambda, N) / 2.0) * (1.0 + XN);
  const double y =
      (weight(fam, 2 * N + 1) + weight(fam, 2 * N + 2) * xN1) /
      (lambda - diagonal(fam, 2 * N + 2));
  const auto f = recurrence_backward(fam, lambda, 2 * N + 1,
                                     SignedLogValue::from_double(1.0),
                                     SignedLogValue::from_double(y), 1);
  return boundary_defect(fam, lambda, f);
}

SignedLogSeq decaying_solution(const JacobiFamily& fam, double lambda,
                               std::int64_t s, std::int64_t N,
                               const BoundParams& bounds, std::int64_t n_len) {
  const std::int64_t M = std::max<std::int64_t>(N + 1, n_len / 2 + 1);
  std::int64_t s_eff = s;
  if (s_eff <= M + 1) s_eff = M + 16;

  const std::int64_t s_list[1] = {s_eff};
  const auto limit = decaying_riccati(fam, lambda, bounds, s_list, N);
  RiccatiSolution head{N,
                       std::vector<double>(
                           limit.solution.values.begin(),
                           limit.solution.values.begin() +
                               static_cast<std::ptrdiff_t>(M + 2 - N)),
                       lambda, Branch::minus};
  const SignedLogSeq x = x_from_riccati(fam, lambda, head);  // [N, M+2]
  const SignedLogSeq upper = reconstruct_f_from_x(fam, lambda, x);
  const auto lower = recurrence_backward(fam, lambda, 2 * N + 1,
                                         upper.at(2 * N + 1), upper.at(2 * N + 2), 1);

  std::vector<SignedLogValue> all;
  all.reserve(static_cast<std::size_t>(upper.last_index()));
  for (std::int64_t n = 1; n <= 2 * N; ++n) all.push_back(lower.at(n));
  for (std::int64_t n = 2 * N + 1; n <= upper.last_index(); ++n) {
    all.push_back(upper.at(n));
  }
  return SignedLogSeq(1, std::move(all));
}

ProportionalityProbe proportionality_probe(const JacobiFamily& fam,
                                           double lambda, std::int64_t N,
                                           const BoundParams& bounds) {
  const Entries<__float128> e{fam.c1, fam.c2, fam.alpha};
  const std::int64_t s_q = std::max<std::int64_t>(4 * N, 512);
  const auto stats =
      head_stats(e, __float128(lambda), s_q, N, __float128(bounds.b_minus));
  return ProportionalityProbe{stats.c_value, stats.spread};
}

std::vector<std::pair<double, double>> shooting_brackets(
    const JacobiFamily& fam, const SpectralWindow& window, int grid_points,
    std::int64_t s, std::int64_t N, const BoundParams& bounds) {
  if (grid_points < 2) throw validation_error("shooting_brackets: need >= 2 points");
  std::vector<std::pair<double, double>> out;
  double prev_lam = window.lo;
  double prev_W = shooting_mismatch(fam, prev_lam, s, N, bounds);
  for (int i = 1; i < grid_points; ++i) {
    const double lam =
        window.lo + (window.hi - window.lo) * i / (grid_points - 1);
    const double W = shooting_mismatch(fam, lam, s, N, bounds);
    if (sgn(W) != sgn(prev_W)) out.emplace_back(prev_lam, lam);
    prev_lam = lam;
    prev_W = W;
  }
  return out;
}

EigenpairEstimate eigenvalue_refine(const JacobiFamily& fam, double lambda_a,
                                    double lambda_b, std::int64_t s,
                                    std::int64_t N, const BoundParams& bounds,
                                    std::int64_t n_len, double bracket_tol) {
  if (n_len < 4'000) {
    throw validation_error("eigenvalue_refine: n_len too small for the decay fit");
  }
  double Wa = shooting_mismatch(fam, lambda_a, s, N, bounds);
  double Wb = shooting_mismatch(fam, lambda_b, s, N, bounds);
  if (sgn(Wa) * sgn(Wb) >= 0) {
    throw numeric_error("eigenvalue_refine: no sign change of W on bracket");
  }
  double a = lambda_a, b = lambda_b;
  while (b - a > bracket_tol) {
    const double mid = 0.5 * (a + b);
    const double Wm = shooting_mismatch(fam, mid, s, N, bounds);
    if (Wm == 0.0) { a = b = mid; break; }
    if (sgn(Wm) == sgn(Wa)) { a = mid; Wa = Wm; }
    else { b = mid; Wb = Wm; }
  }

  const auto polish = quad_polish(fam, a, b, N, bounds.b_minus);
  const double lam0 = static_cast<double>(polish.lambda);

  SignedLogSeq eigvec = decaying_solution(fam, lam0, s, N, bounds, n_len);
  eigvec.normalize_l2();

  const double rec_res = three_term_residual(fam, lam0, eigvec);
  const double bound_res = std::abs(boundary_defect(fam, lam0, eigvec));
  if (rec_res > 1e-10) {
    throw numeric_error("eigenvalue_refine: recurrence residual " +
                        std::to_string(rec_res) + " exceeds 1e-10");
  }
  if (bound_res > 1e-10) {
    throw numeric_error("eigenvalue_refine: boundary residual " +
                        std::to_string(bound_res) + " exceeds 1e-10");
  }

  EigenpairEstimate est{lam0,      std::move(eigvec), rec_res, bound_res,
                        0.0,       0.0,               polish.c_value,
                        polish.spread};
  est.predicted_slope =
      -std::sqrt(lam0 / (2.0 * fam.c1 * fam.c2)) / (1.0 - fam.alpha / 2.0);
  est.decay_slope = decay_rate_fit(est, fam, 1'000,
                                   std::min<std::int64_t>(100'000,
                                                          est.eigvec.last_index()))
                        .fitted;
  return est;
}

DecayFit decay_rate_fit(const EigenpairEstimate& est, const JacobiFamily& fam,
                        std::int64_t fit_lo, std::int64_t fit_hi) {
  fit_hi = std::min(fit_hi, est.eigvec.last_index());
  if (fit_hi < 2 * fit_lo) {
    throw numeric_error("decay_rate_fit: eigenvector range too short for the fit");
  }
  std::vector<double> xs, ys;
  xs.reserve(static_cast<std::size_t>(fit_hi - fit_lo + 1));
  ys.reserve(xs.capacity());
  const double expo = 1.0 - fam.alpha / 2.0;
  for (std::int64_t n = fit_lo; n <= fit_hi; ++n) {
    const auto& v = est.eigvec.at(n);
    if (v.is_zero()) continue;
    xs.push_back(std::pow(static_cast<double>(n), expo));
    ys.push_back(v.logmag);
  }
  const double fitted = ols_slope(xs, ys);
  const double predicted =
      -std::sqrt(est.lambda0 / (2.0 * fam.c1 * fam.c2)) / expo;
  return DecayFit{fitted, predicted, fitted / predicted};
}

std::vector<SpacingEntry> spacing_report(const JacobiFamily& fam,
                                         const SpectralWindow& window,
                                         std::span<const std::int64_t> K_list) {
  for (std::size_t i = 1; i < K_list.size(); ++i) {
    if (K_list[i] <= K_list[i - 1]) {
      throw validation_error("spacing_report: K_list must be ascending");
    }
  }
  std::vector<SpacingEntry> out;
  for (std::int64_t K : K_list) {
    const auto spec = truncate_eigenvalues(fam, K, window);
    double min_gap = std::numeric_limits<double>::infinity();
    for (std::size_t i = 1; i < spec.eigenvalues.size(); ++i) {
      min_gap = std::min(min_gap, spec.eigenvalues[i] - spec.eigenvalues[i - 1]);
    }
    out.push_back(SpacingEntry{K,
                               static_cast<std::int64_t>(spec.eigenvalues.size()),
                               min_gap, spec.bracket_audit});
  }
  return out;
}

}  // namespace jacspec
