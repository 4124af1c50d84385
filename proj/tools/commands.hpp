#pragma once

#include "emit.hpp"
#include "run_config.hpp"

namespace jacspec::cli {

RunReport run_classify(double c1, double c2);
RunReport run_expand(const RunConfig& cfg);
RunReport run_kelley(const RunConfig& cfg);
RunReport run_spectrum(const RunConfig& cfg);
RunReport run_solve(const RunConfig& cfg);

}  // namespace jacspec::cli
