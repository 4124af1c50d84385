#include "jacspec/fit.hpp"

#include <array>
#include <cmath>

#include "jacspec/errors.hpp"

namespace jacspec {

double ols_slope(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw validation_error("ols_slope: need two equal-length samples");
  }
  const double n = static_cast<double>(x.size());
  double sx = 0.0, sy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
  }
  const double mx = sx / n, my = sy / n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  if (sxx == 0.0) throw validation_error("ols_slope: degenerate abscissae");
  return sxy / sxx;
}

std::span<const std::int64_t> decade_abscissae() {
  // round(10^{3 + k/2}) for k = 0..6
  static constexpr std::array<std::int64_t, 7> grid = {
      1000, 3162, 10000, 31623, 100000, 316228, 1000000};
  return {grid.data(), grid.size()};
}

double loglog_slope(std::span<const std::int64_t> n,
                    std::span<const double> abs_residual) {
  if (n.size() != abs_residual.size()) {
    throw validation_error("loglog_slope: size mismatch");
  }
  std::vector<double> lx, ly;
  lx.reserve(n.size());
  ly.reserve(n.size());
  for (std::size_t i = 0; i < n.size(); ++i) {
    if (abs_residual[i] > 0.0) {
      lx.push_back(std::log(static_cast<double>(n[i])));
      ly.push_back(std::log(abs_residual[i]));
    }
  }
  if (lx.size() < 2) {
    throw numeric_error("loglog_slope: fewer than two nonzero residuals");
  }
  return ols_slope(lx, ly);
}

}  // namespace jacspec
