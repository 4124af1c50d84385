#pragma once

#include <cstdint>
#include <string>

#include "jacspec/family.hpp"
#include "jacspec/kelley.hpp"

namespace jacspec::cli {

/// Everything a subcommand needs, fed from defaults, an optional flat
/// key=value config file, and command-line overrides (in that order).
struct RunConfig {
  double c1 = 2.0;
  double c2 = 1.0;
  double alpha = 0.4;

  double lo = 1.0;
  double hi = 2.0;
  int grid = 9;

  // envelope offsets; NaN means "use BoundParams::defaults(alpha)"
  double a_plus = std::numeric_limits<double>::quiet_NaN();
  double a_minus = std::numeric_limits<double>::quiet_NaN();
  double b_minus = std::numeric_limits<double>::quiet_NaN();
  double b_plus = std::numeric_limits<double>::quiet_NaN();

  std::int64_t n_start = 0;     // 0 = derive from the envelope scan
  std::int64_t s_cap = 200000;  // cap for backward seed depths
  std::int64_t K = 4000;        // truncation size
  std::int64_t n_max = 100000;  // solution depth

  // solve-specific
  double lambda = 1.0;
  std::string kind = "first";  // first | forward | backward
  double f1 = 1.0;
  double f2 = 0.0;
  std::int64_t m = 0;  // backward seed index (0 = n_max)

  std::string format = "csv";  // csv | json
  std::string out;             // empty = stdout

  JacobiFamily family() const;
  SpectralWindow window() const;
  BoundParams bounds() const;
};

}  // namespace jacspec::cli
