#include "run_config.hpp"

#include <cmath>

namespace jacspec::cli {

JacobiFamily RunConfig::family() const {
  return JacobiFamily::make(c1, c2, alpha);
}

SpectralWindow RunConfig::window() const { return SpectralWindow::make(lo, hi); }

BoundParams RunConfig::bounds() const {
  BoundParams b = BoundParams::defaults(alpha);
  if (!std::isnan(a_plus)) b.a_plus = a_plus;
  if (!std::isnan(a_minus)) b.a_minus = a_minus;
  if (!std::isnan(b_minus)) b.b_minus = b_minus;
  if (!std::isnan(b_plus)) b.b_plus = b_plus;
  b.validate();
  return b;
}

}  // namespace jacspec::cli
