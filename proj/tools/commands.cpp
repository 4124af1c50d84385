#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "jacspec/fit.hpp"
#include "jacspec/poincare.hpp"
#include "jacspec/recurrence.hpp"
#include "jacspec/riccati.hpp"
#include "jacspec/spectrum.hpp"

namespace jacspec::cli {

namespace {

std::vector<double> lambda_grid(const RunConfig& cfg) {
  std::vector<double> g;
  g.reserve(static_cast<std::size_t>(cfg.grid));
  for (int i = 0; i < cfg.grid; ++i) {
    g.push_back(cfg.grid == 1
                    ? cfg.lo
                    : cfg.lo + (cfg.hi - cfg.lo) * i / (cfg.grid - 1));
  }
  return g;
}

std::string lam_tag(double lam) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", lam);
  return buf;
}

}  // namespace

RunReport run_classify(double c1, double c2) {
  const PhaseRegion r = phase_classify(c1, c2);
  RunReport rep;
  rep.table.header = {"c1", "c2", "tag", "discriminant"};
  rep.table.rows.push_back(
      {c1, c2, std::string(to_string(r.tag)), r.discriminant});
  rep.notes.push_back(std::string("phase region: ") + to_string(r.tag));
  return rep;
}

RunReport run_expand(const RunConfig& cfg) {
  const JacobiFamily fam = cfg.family();
  const auto Fx = F_expansion(fam);  // validates the critical boundary
  const auto Gx = G_expansion(fam);
  const auto Bx = beta_expansion(fam);
  const auto ns = decade_abscissae();

  RunReport rep;
  rep.table.header = {"lambda", "n",       "F_exact", "F_exp",
                      "F_res",  "G_exact", "G_exp",   "G_res",
                      "beta_exact", "beta_exp", "beta_res"};
  const double slope_tol = -(1.0 + fam.alpha) + 0.1;
  for (double lam : lambda_grid(cfg)) {
    std::vector<double> rF, rG, rB;
    for (std::int64_t n : ns) {
      const double dn = static_cast<double>(n);
      const double Fe = poincare_F(fam, lam, n), Fa = Fx.evaluate(lam, dn);
      const double Ge = poincare_G(fam, lam, n), Ga = Gx.evaluate(lam, dn);
      const double Be = beta(fam, lam, n), Ba = Bx.evaluate(lam, dn);
      rF.push_back(std::abs(Fe - Fa));
      rG.push_back(std::abs(Ge - Ga));
      rB.push_back(std::abs(Be - Ba));
      rep.table.rows.push_back({lam, n, Fe, Fa, Fe - Fa, Ge, Ga, Ge - Ga, Be,
                                Ba, Be - Ba});
    }
    const double sF = loglog_slope(ns, rF);
    const double sG = loglog_slope(ns, rG);
    const double sB = loglog_slope(ns, rB);
    rep.verdicts.push_back({"F_res_slope lambda=" + lam_tag(lam), sF <= slope_tol, sF});
    rep.verdicts.push_back({"G_res_slope lambda=" + lam_tag(lam), sG <= slope_tol, sG});
    rep.verdicts.push_back({"beta_res_slope lambda=" + lam_tag(lam), sB <= slope_tol, sB});
  }
  rep.notes.push_back("residual slope threshold: " + std::to_string(slope_tol));
  return rep;
}

RunReport run_kelley(const RunConfig& cfg) {
  const JacobiFamily fam = cfg.family();
  const BoundParams bounds = cfg.bounds();
  const auto grid = lambda_grid(cfg);

  EnvelopeScanOptions scan;
  scan.lookahead = std::max<std::int64_t>(scan.lookahead, cfg.n_max);
  const auto env_plus = envelopes(fam, grid, bounds, Branch::plus, scan);
  const auto env_minus = envelopes(fam, grid, bounds, Branch::minus, scan);

  const std::int64_t Np =
      cfg.n_start > 0 ? cfg.n_start : env_plus.valid_from();
  const std::int64_t Nm =
      cfg.n_start > 0 ? cfg.n_start : env_minus.valid_from();

  std::vector<std::int64_t> s_list;
  for (std::int64_t s = cfg.s_cap / 8; s <= cfg.s_cap; s *= 2) {
    if (s > Nm + 16) s_list.push_back(s);
  }
  if (s_list.empty()) s_list.push_back(std::max(cfg.s_cap, Nm + 32));

  RunReport rep;
  rep.table.header = {"lambda",         "valid_from_plus", "valid_from_minus",
                      "gap_plus",       "gap_minus",       "plus_trapped",
                      "plus_violation", "minus_trapped",   "minus_violation",
                      "certificate",    "sharp_plus",      "sharp_minus"};

  bool all_trapped = true;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double lam = grid[i];
    const auto plus = growing_riccati(fam, lam, bounds, Np, cfg.n_max);
    const auto minus = decaying_riccati(fam, lam, bounds, s_list, Nm);

    const auto tp = verify_trapping(env_plus, plus);
    const auto tm = verify_trapping(env_minus, minus.solution);
    all_trapped = all_trapped && tp.trapped && tm.trapped;

    double sharp_p = 0.0, sharp_m = 0.0;
    for (std::int64_t n = Np; n <= plus.last_index(); ++n) {
      sharp_p = std::max(sharp_p,
                         std::abs(plus.at(n) - phi(fam, lam, n)) * static_cast<double>(n));
    }
    const std::int64_t m_hi = std::min(minus.solution.last_index(), cfg.n_max);
    for (std::int64_t n = Nm; n <= m_hi; ++n) {
      sharp_m = std::max(sharp_m, std::abs(minus.solution.at(n) + phi(fam, lam, n)) *
                                      static_cast<double>(n));
    }

    rep.table.rows.push_back(
        {lam, env_plus.per_lambda_valid_from()[i],
         env_minus.per_lambda_valid_from()[i],
         (bounds.b_plus - bounds.a_plus), (bounds.a_minus - bounds.b_minus),
         std::string(tp.trapped ? "yes" : "no"), tp.max_violation,
         std::string(tm.trapped ? "yes" : "no"), tm.max_violation,
         minus.convergence_certificate, sharp_p, sharp_m});

    rep.verdicts.push_back({"trapped lambda=" + lam_tag(lam),
                            tp.trapped && tm.trapped,
                            std::max(tp.max_violation, tm.max_violation)});
    rep.verdicts.push_back({"backward_limit_converged lambda=" + lam_tag(lam),
                            minus.convergence_certificate < 1e-10,
                            minus.convergence_certificate});
  }
  rep.verdicts.push_back(
      {"uniform_valid_from_below_cap",
       std::max(env_plus.valid_from(), env_minus.valid_from()) < 10'000,
       static_cast<double>(std::max(env_plus.valid_from(), env_minus.valid_from()))});
  rep.notes.push_back("plus-branch start N=" + std::to_string(Np) +
                      ", minus-branch start N=" + std::to_string(Nm));
  return rep;
}

RunReport run_spectrum(const RunConfig& cfg) {
  const JacobiFamily fam = cfg.family();
  const SpectralWindow window = cfg.window();
  const BoundParams bounds = cfg.bounds();

  const std::int64_t K_list[2] = {cfg.K, 2 * cfg.K};
  const auto spacing = spacing_report(fam, window, K_list);
  const auto trunc = truncate_eigenvalues(fam, cfg.K, window);
  const auto trunc2 = truncate_eigenvalues(fam, 2 * cfg.K, window);

  ShootingDepths depths =
      default_depths(fam, window, cfg.grid, bounds);
  if (cfg.n_start > 0) depths.N = cfg.n_start;
  depths.s = std::min(depths.s, cfg.s_cap);

  // independent bracket scan, then one refinement per bracket
  const int scan_points = std::max(64, cfg.grid * 8);
  const auto brackets = shooting_brackets(fam, window, scan_points, depths.s,
                                          depths.N, bounds);

  RunReport rep;
  rep.table.header = {"index",        "lambda_sturm",   "lambda_shoot",
                      "delta",        "rec_residual",   "boundary_residual",
                      "decay_fitted", "decay_predicted", "decay_ratio",
                      "C",            "C_spread"};

  double max_delta = 0.0;
  double c_min = std::numeric_limits<double>::infinity();
  double c_max = 0.0;
  bool residuals_ok = true, decay_ok = true, spread_ok = true;
  std::vector<double> shoot_evs;
  for (std::size_t i = 0; i < brackets.size(); ++i) {
    const auto est = eigenvalue_refine(fam, brackets[i].first,
                                       brackets[i].second, depths.s, depths.N,
                                       bounds, cfg.n_max);
    shoot_evs.push_back(est.lambda0);
    // nearest truncation eigenvalue
    double sturm_ev = std::numeric_limits<double>::quiet_NaN();
    double best = std::numeric_limits<double>::infinity();
    for (double ev : trunc.eigenvalues) {
      if (std::abs(ev - est.lambda0) < best) {
        best = std::abs(ev - est.lambda0);
        sturm_ev = ev;
      }
    }
    max_delta = std::max(max_delta, best);
    const auto fit = decay_rate_fit(est, fam, 1'000,
                                    std::min<std::int64_t>(100'000, cfg.n_max));
    residuals_ok = residuals_ok && est.recurrence_residual <= 1e-10 &&
                   est.boundary_residual <= 1e-10;
    decay_ok = decay_ok && fit.ratio >= 0.85 && fit.ratio <= 1.15;
    spread_ok = spread_ok && est.prop_spread < 1e-6;
    c_min = std::min(c_min, std::abs(est.prop_constant));
    c_max = std::max(c_max, std::abs(est.prop_constant));
    rep.table.rows.push_back({static_cast<std::int64_t>(i), sturm_ev,
                              est.lambda0, best, est.recurrence_residual,
                              est.boundary_residual, fit.fitted, fit.predicted,
                              fit.ratio, est.prop_constant, est.prop_spread});
  }

  const bool counts_stable =
      trunc.eigenvalues.size() == trunc2.eigenvalues.size() &&
      trunc.eigenvalues.size() == brackets.size();
  double k_shift = 0.0;
  for (std::size_t i = 0;
       i < std::min(trunc.eigenvalues.size(), trunc2.eigenvalues.size()); ++i) {
    k_shift = std::max(k_shift,
                       std::abs(trunc.eigenvalues[i] - trunc2.eigenvalues[i]));
  }

  rep.verdicts.push_back({"cross_method_max_delta", max_delta <= 1e-9, max_delta});
  rep.verdicts.push_back(
      {"counts_stable", counts_stable, static_cast<double>(trunc.eigenvalues.size())});
  rep.verdicts.push_back({"K_doubling_shift", k_shift <= 1e-8, k_shift});
  if (!rep.table.rows.empty()) {
    rep.verdicts.push_back({"eigvec_residuals", residuals_ok, 1e-10});
    rep.verdicts.push_back({"decay_ratio_band", decay_ok, 0.15});
    rep.verdicts.push_back({"proportionality_spread", spread_ok, 1e-6});
    rep.verdicts.push_back({"C_min_positive", c_min > 0.0, c_min});
    rep.notes.push_back("C range: [" + std::to_string(c_min) + ", " +
                        std::to_string(c_max) + "]");
  } else {
    rep.notes.push_back("no eigenvalues in the window (spectral gap)");
  }
  for (const auto& sp : spacing) {
    rep.notes.push_back("K=" + std::to_string(sp.K) + ": count=" +
                        std::to_string(sp.count) + ", min_gap=" +
                        (std::isfinite(sp.min_gap) ? std::to_string(sp.min_gap)
                                                   : std::string("inf")) +
                        ", bracket_audit=" + (sp.bracket_audit ? "ok" : "FAIL"));
  }
  rep.notes.push_back("depths: N=" + std::to_string(depths.N) +
                      ", s=" + std::to_string(depths.s));
  return rep;
}

RunReport run_solve(const RunConfig& cfg) {
  const JacobiFamily fam = cfg.family();
  SignedLogSeq seq = [&] {
    if (cfg.kind == "first") {
      return first_kind_polynomials(fam, cfg.lambda, cfg.n_max);
    }
    if (cfg.kind == "forward") {
      return recurrence_forward(fam, cfg.lambda, cfg.f1, cfg.f2, cfg.n_max);
    }
    if (cfg.kind == "backward") {
      const std::int64_t m = cfg.m > 0 ? cfg.m : cfg.n_max;
      return recurrence_backward(fam, cfg.lambda, m, cfg.f1, cfg.f2, 1);
    }
    throw validation_error("solve: kind must be first, forward or backward");
  }();

  RunReport rep;
  rep.table.header = {"n", "sign", "logmag"};
  for (std::int64_t n = seq.first_index(); n <= seq.last_index(); ++n) {
    const auto& v = seq.at(n);
    rep.table.rows.push_back(
        {n, static_cast<std::int64_t>(v.sign), v.logmag});
  }
  const double res = three_term_residual(fam, cfg.lambda, seq);
  rep.verdicts.push_back({"three_term_residual", res <= 1e-13, res});
  if (cfg.kind == "first") {
    const double defect = boundary_defect(fam, cfg.lambda, seq);
    rep.notes.push_back("boundary defect: " + std::to_string(defect));
  }
  return rep;
}

}  // namespace jacspec::cli
