#pragma once

#include <functional>
#include <vector>

#include "bvp/errors.hpp"

namespace bvp {

struct QuadratureSettings {
    double abs_tol = 1e-10;
    int max_depth = 40;
};

using Integrand = std::function<double(double)>;

/// Adaptive composite Simpson integral of h over [a,b] with Richardson
/// error control (|S_fine - S_coarse|/15 against the local tolerance).
/// Exact (to roundoff) for polynomials of degree <= 3.
/// Throws DepthExceeded when the bisection hits max_depth.
double integrate(const Integrand& h, double a, double b, const QuadratureSettings& q);

/// Splits [a,b] at the given seam locations (sorted, inside [a,b]) and sums
/// integrate over the smooth pieces. Seams outside (a,b) are ignored.
double integrate_split(const Integrand& h, double a, double b,
                       const std::vector<double>& seams, const QuadratureSettings& q);

}  // namespace bvp
