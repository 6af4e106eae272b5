#pragma once

#include <string>
#include <utility>
#include <vector>

#include "bvp/constants.hpp"
#include "bvp/exprlang.hpp"

namespace bvp {

/// Numerical classification of a limit of f(u)/u, with the sampled ratios
/// that produced it. `confident` drops to false when the trailing trend is
/// non-monotone (oscillating ratios) — the classification still proceeds.
struct AsymptoticEstimate {
    AsymptoticValue value;
    std::vector<std::pair<double, double>> samples;  // (u, f(u)/u), finite only
    bool confident = true;
    std::vector<std::string> notes;  // e.g. discarded overflow samples
};

/// Estimates f0 = lim_{u->0+} f(u)/u by sampling u = 1e-1 .. 1e-8.
AsymptoticEstimate estimate_f0(const Expression& f);

/// Estimates f_inf = lim_{u->inf} f(u)/u by sampling u = 1e1 .. 1e8;
/// samples where f overflows are discarded with a note.
AsymptoticEstimate estimate_finf(const Expression& f);

}  // namespace bvp
