#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace jacspec {

/// Ordinary least-squares slope of y against x.
double ols_slope(std::span<const double> x, std::span<const double> y);

/// Fixed geometric abscissae 10^3, 10^3.5, ..., 10^6 (integers) used by all
/// residual-slope fits, so slope numbers are comparable across runs.
std::span<const std::int64_t> decade_abscissae();

/// OLS slope of ln|res_i| against ln n_i. Entries with res == 0 are skipped.
double loglog_slope(std::span<const std::int64_t> n,
                    std::span<const double> abs_residual);

}  // namespace jacspec
