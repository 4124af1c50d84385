#include "jacspec/family.hpp"

#include <cmath>
#include <string>

namespace jacspec {

JacobiFamily JacobiFamily::make(double c1, double c2, double alpha,
                                bool extended_alpha) {
  if (!(c1 > 0.0) || !(c2 > 0.0)) {
    throw validation_error("JacobiFamily: c1 and c2 must be positive, got c1=" +
                           std::to_string(c1) + " c2=" + std::to_string(c2));
  }
  const double lo = extended_alpha ? 0.0 : 1.0 / 3.0;
  const double hi = extended_alpha ? 1.0 : 0.5;
  if (!(alpha > lo) || !(alpha < hi)) {
    throw validation_error("JacobiFamily: alpha=" + std::to_string(alpha) +
                           " outside (" + std::to_string(lo) + ", " +
                           std::to_string(hi) + ")");
  }
  return JacobiFamily{c1, c2, alpha};
}

bool JacobiFamily::critical_boundary() const {
  return std::abs(std::abs(c1 - c2) - 1.0) <= kBoundaryTol;
}

double weight(const JacobiFamily& fam, std::int64_t n) {
  if (n < 1) throw validation_error("weight: n must be >= 1");
  const double c = (n % 2 == 1) ? fam.c1 : fam.c2;
  return std::pow(static_cast<double>(n), fam.alpha) * c;
}

double diagonal(const JacobiFamily& fam, std::int64_t n) {
  if (n < 1) throw validation_error("diagonal: n must be >= 1");
  return std::pow(static_cast<double>(n), fam.alpha);
}

SpectralWindow SpectralWindow::make(double lo, double hi) {
  if (!(lo > 0.0) || !(hi >= lo) || !std::isfinite(hi)) {
    throw validation_error("SpectralWindow: need 0 < lo <= hi < inf");
  }
  return SpectralWindow{lo, hi};
}

const char* to_string(PhaseTag tag) {
  switch (tag) {
    case PhaseTag::absolutely_continuous: return "absolutely_continuous";
    case PhaseTag::discrete: return "discrete";
    case PhaseTag::boundary_easy: return "boundary_easy";
    case PhaseTag::boundary_critical: return "boundary_critical";
  }
  return "unknown";
}

PhaseRegion phase_classify(double c1, double c2) {
  if (!(c1 > 0.0) || !(c2 > 0.0)) {
    throw validation_error("phase_classify: c1, c2 must be positive");
  }
  const double disc = std::abs(c1 * c1 + c2 * c2 - 1.0) / (c1 * c2);
  PhaseTag tag;
  if (std::abs(disc - 2.0) <= kBoundaryTol) {
    // disc == 2 forces (c1+c2)^2 = 1 or (c1-c2)^2 = 1; pick the closer identity
    const double d_easy = std::abs(c1 + c2 - 1.0);
    const double d_crit = std::abs(std::abs(c1 - c2) - 1.0);
    tag = d_easy <= d_crit ? PhaseTag::boundary_easy : PhaseTag::boundary_critical;
  } else if (disc < 2.0) {
    tag = PhaseTag::absolutely_continuous;
  } else {
    tag = PhaseTag::discrete;
  }
  return PhaseRegion{tag, disc};
}

CarlemanReport carleman_check(const JacobiFamily& fam, std::int64_t n_terms) {
  if (n_terms < 1) throw validation_error("carleman_check: n_terms must be >= 1");
  double sum = 0.0;
  for (std::int64_t n = 1; n <= n_terms; ++n) sum += 1.0 / weight(fam, n);
  // sum 1/b_n ~ sum n^{-alpha} diverges for alpha < 1
  return CarlemanReport{fam.alpha < 1.0, sum};
}

}  // namespace jacspec
