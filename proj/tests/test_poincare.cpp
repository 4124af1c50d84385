#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "jacspec/fit.hpp"
#include "jacspec/poincare.hpp"
#include "jacspec/recurrence.hpp"

using namespace jacspec;

namespace {

const JacobiFamily ref = JacobiFamily::make(2.0, 1.0, 0.4);

// Independent transcription of the coefficient formulas, kept deliberately
// separate from the library path.
double oracle_F(const JacobiFamily& f, double lam, std::int64_t n) {
  auto b = [&](std::int64_t k) {
    return std::pow(double(k), f.alpha) * (k % 2 ? f.c1 : f.c2);
  };
  auto q = [&](std::int64_t k) { return std::pow(double(k), f.alpha); };
  return (q(2 * n + 2) - lam) * b(2 * n) * b(2 * n) /
             ((q(2 * n) - lam) * b(2 * n + 1) * b(2 * n + 2)) -
         (q(2 * n + 1) - lam) * (q(2 * n + 2) - lam) /
             (b(2 * n + 1) * b(2 * n + 2)) +
         b(2 * n + 1) / b(2 * n + 2);
}

double oracle_G(const JacobiFamily& f, double lam, std::int64_t n) {
  auto b = [&](std::int64_t k) {
    return std::pow(double(k), f.alpha) * (k % 2 ? f.c1 : f.c2);
  };
  auto q = [&](std::int64_t k) { return std::pow(double(k), f.alpha); };
  return (q(2 * n + 2) - lam) * b(2 * n - 1) * b(2 * n) /
         ((q(2 * n) - lam) * b(2 * n + 1) * b(2 * n + 2));
}

}  // namespace

TEST_CASE("min_index_N keeps q_{2n} above the window") {
  CHECK(min_index_N(SpectralWindow::make(1.0, 2.0), 0.4) == 3);
  CHECK(min_index_N(SpectralWindow::make(1.0, 1.0), 0.4) == 1);
  for (double hi : {0.5, 1.7, 3.0, 9.0}) {
    const auto N = min_index_N(SpectralWindow::make(0.2, hi), 0.4);
    for (std::int64_t n = N; n < N + 50; ++n) {
      CHECK(std::pow(2.0 * n, 0.4) > hi);
    }
  }
}

TEST_CASE("coefficients match an independent transcription") {
  CHECK(poincare_F(ref, 1.0, 10) ==
        doctest::Approx(oracle_F(ref, 1.0, 10)).epsilon(1e-14));
  CHECK(poincare_F(ref, 1.5, 50) ==
        doctest::Approx(oracle_F(ref, 1.5, 50)).epsilon(1e-14));
  CHECK(poincare_G(ref, 1.5, 50) ==
        doctest::Approx(oracle_G(ref, 1.5, 50)).epsilon(1e-14));
  CHECK(poincare_G(ref, 1.0, 7) ==
        doctest::Approx(oracle_G(ref, 1.0, 7)).epsilon(1e-14));
}

TEST_CASE("coefficients reject the inadmissible range") {
  // q_4 = 4^0.4 < 2, so n = 2 is below the admissible range at lambda = 2
  CHECK_THROWS_AS(poincare_F(ref, 2.0, 2), validation_error);
  CHECK_THROWS_AS(poincare_G(ref, 2.0, 2), validation_error);
}

TEST_CASE("large-n limits of F and G") {
  for (double lam : {1.0, 1.5, 2.0}) {
    CHECK(std::abs(poincare_F(ref, lam, 1'000'000) - 2.0) < 0.05);
    CHECK(std::abs(poincare_G(ref, lam, 1'000'000) - 1.0) < 0.01);
  }
}

TEST_CASE("lambda = 0 substitution identity") {
  // at lambda = 0 the q-ratio in the first term collapses:
  // q_{2n+2} b_{2n}^2 / q_{2n} = b_{2n} b_{2n+2}, leaving
  // F_n(0) = b_{2n}/b_{2n+1} - q_{2n+1} q_{2n+2}/(b_{2n+1} b_{2n+2})
  //          + b_{2n+1}/b_{2n+2}
  for (std::int64_t n : {1, 7, 40}) {
    const double expected =
        weight(ref, 2 * n) / weight(ref, 2 * n + 1) -
        diagonal(ref, 2 * n + 1) * diagonal(ref, 2 * n + 2) /
            (weight(ref, 2 * n + 1) * weight(ref, 2 * n + 2)) +
        weight(ref, 2 * n + 1) / weight(ref, 2 * n + 2);
    CHECK(poincare_F(ref, 0.0, n) == doctest::Approx(expected).epsilon(1e-14));
  }
}

TEST_CASE("G factors through A") {
  for (std::int64_t n : {5, 50, 500}) {
    for (double lam : {1.0, 1.9}) {
      const double expected = coeff_A(ref, lam, n) *
                              std::pow((2.0 * n - 1.0) / (2.0 * n), ref.alpha);
      CHECK(poincare_G(ref, lam, n) == doctest::Approx(expected).epsilon(1e-14));
    }
  }
}

TEST_CASE("F decomposes through A, B, C") {
  for (std::int64_t n : {4, 30}) {
    const double lam = 1.3;
    const double expected = (ref.c2 / ref.c1) * coeff_A(ref, lam, n) -
                            coeff_B(ref, lam, n) / (ref.c1 * ref.c2) +
                            (ref.c1 / ref.c2) * coeff_C(ref, n);
    CHECK(poincare_F(ref, lam, n) == doctest::Approx(expected).epsilon(1e-14));
  }
}

TEST_CASE("expansion coefficients as printed") {
  const auto Fx = F_expansion(ref);
  CHECK(Fx.coefficient(0, 1.0) == 2.0);
  CHECK(Fx.coefficient(0, 1.7) == 2.0);
  // 2^{1-alpha} lambda / (c1 c2) at lambda = 1
  CHECK(Fx.coefficient(1, 1.0) ==
        doctest::Approx(0.75785828325519904).epsilon(1e-14));
  CHECK(Fx.remainder_order() == doctest::Approx(1.4));

  const auto Gx = G_expansion(ref);
  CHECK(Gx.coefficient(1, 1.0) == doctest::Approx(-0.4));
  // lambda-independent through order n^{-1}
  CHECK(Gx.evaluate(1.0, 500.0) == Gx.evaluate(1.9, 500.0));

  CHECK_THROWS_AS(F_expansion(JacobiFamily::make(1.0, 1.0, 0.4)),
                  validation_error);
  CHECK_THROWS_AS(F_expansion(JacobiFamily::make(1.6, 0.6, 0.6, true)),
                  validation_error);
}

TEST_CASE("expansion residual slopes meet the remainder order") {
  const auto Fx = F_expansion(ref);
  const auto Gx = G_expansion(ref);
  const auto ns = decade_abscissae();
  const double tol = -(1.0 + ref.alpha) + 0.1;
  double worstF = -10.0, worstG = -10.0;
  for (int i = 0; i < 9; ++i) {
    const double lam = 1.0 + i / 8.0;
    std::vector<double> rF, rG;
    for (auto n : ns) {
      rF.push_back(std::abs(poincare_F(ref, lam, n) - Fx.evaluate(lam, double(n))));
      rG.push_back(std::abs(poincare_G(ref, lam, n) - Gx.evaluate(lam, double(n))));
    }
    worstF = std::max(worstF, loglog_slope(ns, rF));
    worstG = std::max(worstG, loglog_slope(ns, rG));
  }
  CHECK(worstF <= tol);
  CHECK(worstG <= tol);
}

TEST_CASE("A, B, C approach their truncations at the claimed rate") {
  const auto ns = decade_abscissae();
  const double a = ref.alpha;
  for (double lam : {1.0, 2.0}) {
    std::vector<double> rA, rB, rC;
    for (auto n : ns) {
      const double dn = static_cast<double>(n);
      rA.push_back(std::abs(coeff_A(ref, lam, n) - (1.0 - a / (2.0 * dn))));
      rB.push_back(std::abs(coeff_B(ref, lam, n) -
                            (1.0 - 2.0 * lam * std::pow(2.0 * dn, -a) +
                             lam * lam * std::pow(2.0 * dn, -2.0 * a))));
      rC.push_back(std::abs(coeff_C(ref, n) - (1.0 - a / (2.0 * dn))));
    }
    CHECK(loglog_slope(ns, rA) <= -(1.0 + a) + 0.1);
    CHECK(loglog_slope(ns, rB) <= -(1.0 + a) + 0.1);
    CHECK(loglog_slope(ns, rC) <= -1.9);  // C misses its truncation at O(n^-2)
  }
}

TEST_CASE("split and reconstruct round-trips a forward solution") {
  const double lam = 1.1;
  const auto f = recurrence_forward(ref, lam, 0.7, -0.3, 2'100);
  const auto x = split_x(f, 3, 1'000);
  const auto rebuilt = reconstruct_f_from_x(ref, lam, x);
  CHECK(rebuilt.first_index() == 7);
  CHECK(rebuilt.last_index() == 2'001);
  for (std::int64_t n = 7; n <= 2'001; ++n) {
    const auto& got = rebuilt.at(n);
    const auto& want = f.at(n);
    CHECK(got.sign == want.sign);
    if (want.sign != 0) {
      CHECK(std::abs(got.logmag - want.logmag) < 1e-12);
    }
  }
  CHECK(three_term_residual(ref, lam, rebuilt) <= 1e-12);

  // odd-row coupling (transcribed directly) holds on the rebuilt sequence
  const auto y = split_y(rebuilt, 4, 1'000);
  double worst = 0.0;
  for (std::int64_t n = 5; n <= 1'000; ++n) {
    const double shift =
        std::max({y.at(n - 1).logmag, x.at(n - 1).logmag, y.at(n).logmag});
    const double t1 = y.at(n - 1).sign * weight(ref, 2 * n - 2) *
                      std::exp(y.at(n - 1).logmag - shift);
    const double t2 = x.at(n - 1).sign * (diagonal(ref, 2 * n - 1) - lam) *
                      std::exp(x.at(n - 1).logmag - shift);
    const double t3 =
        y.at(n).sign * weight(ref, 2 * n - 1) * std::exp(y.at(n).logmag - shift);
    worst = std::max(worst, std::abs(t1 + t2 + t3));
  }
  CHECK(worst <= 1e-11);
}

TEST_CASE("reconstruction guards the q_{2n} = lambda singularity") {
  const double lam = diagonal(ref, 10);  // exactly q_{2n} for n = 5
  std::vector<double> raw(8, 1.0);
  const auto x = SignedLogSeq::from_doubles(3, raw);
  CHECK_THROWS_AS(reconstruct_f_from_x(ref, lam, x), validation_error);
}

TEST_CASE("zero x gives zero y") {
  std::vector<SignedLogValue> zeros(6);
  const SignedLogSeq x(3, zeros);
  const auto f = reconstruct_f_from_x(ref, 1.5, x);
  for (std::int64_t n = f.first_index(); n <= f.last_index(); ++n) {
    CHECK(f.at(n).sign == 0);
  }
}

TEST_CASE("verify_poincare separates solutions from noise") {
  const double lam = 1.4;
  const auto f = recurrence_forward(ref, lam, 0.3, 0.9, 700);
  const auto x = split_x(f, 3, 340);
  CHECK(verify_poincare(ref, lam, x) <= 1e-12);

  std::mt19937 rng(23);
  std::uniform_real_distribution<double> u(0.5, 1.5);
  std::vector<double> noise;
  for (int i = 0; i < 60; ++i) noise.push_back(u(rng) * (rng() % 2 ? 1 : -1));
  const auto xs = SignedLogSeq::from_doubles(5, noise);
  CHECK(verify_poincare(ref, lam, xs) > 1e-3);

  std::vector<SignedLogValue> zeros(10);
  CHECK(verify_poincare(ref, lam, SignedLogSeq(5, zeros)) == 0.0);
}

TEST_CASE("solutions of the decimated equation reconstruct to solutions") {
  // solve x_{n+1} = -F_n x_n - G_n x_{n-1} directly from random seeds
  std::mt19937 rng(31);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const double lam = 1.6;
  const std::int64_t N = 3, M = 800;
  for (int trial = 0; trial < 3; ++trial) {
    std::vector<SignedLogValue> xv;
    double u0 = u(rng), u1 = u(rng), L = 0.0;
    xv.push_back(SignedLogValue::from_scaled(u0, L));
    xv.push_back(SignedLogValue::from_scaled(u1, L));
    for (std::int64_t n = N + 1; n < M; ++n) {
      const double nxt = -poincare_F(ref, lam, n) * u1 -
                         poincare_G(ref, lam, n) * u0;
      u0 = u1;
      u1 = nxt;
      const double m = std::max(std::abs(u0), std::abs(u1));
      u0 /= m;
      u1 /= m;
      L += std::log(m);
      xv.push_back(SignedLogValue::from_scaled(u1, L));
    }
    const SignedLogSeq x(N, xv);
    CHECK(verify_poincare(ref, lam, x) <= 1e-12);
    const auto f = reconstruct_f_from_x(ref, lam, x);
    CHECK(three_term_residual(ref, lam, f) <= 1e-12);
  }
}
