#pragma once

#include <Eigen/Dense>

#include "bvp/errors.hpp"

namespace bvp {

/// A real-valued function sampled on the uniform grid t_i = i/n, i = 0..n.
/// n must be >= 16 and even (Simpson-compatible).
struct GridFunction {
    int n;
    Eigen::VectorXd values;  // n+1 entries

    static GridFunction constant(int n, double c);

    double h() const { return 1.0 / n; }
    double node(int i) const { return static_cast<double>(i) / n; }

    /// Piecewise-linear interpolant at t in [0,1].
    double interp(double t) const;

    double sup_norm() const { return values.cwiseAbs().maxCoeff(); }

    /// Validates the structural invariants (n >= 16, even, finite values).
    void check_valid() const;
};

/// Integral of the grid function from 0 to b (0 <= b <= 1), accurate to
/// O(h^4): Euler-Maclaurin-corrected trapezoid over whole cells with
/// finite-difference endpoint slopes, plus a local quadratic fit for the
/// partial cell when b is not a grid node.
double integrate_grid(const GridFunction& u, double b);

}  // namespace bvp
