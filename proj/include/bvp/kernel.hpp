#pragma once

#include "bvp/errors.hpp"

namespace bvp {

/// Boundary-condition parameters of the problem
///   u'' + lambda a(t) f(u) = 0,  u'(0) = 0,  u(1) = alpha * int_0^eta u(s) ds
/// with 0 < eta < 1 and 0 < alpha < 1/eta, so 1 - alpha*eta > 0.
struct BvpParams {
    double alpha;
    double eta;
};

/// Validates alpha and eta against their strict admissible ranges.
/// Throws OutOfRange naming the violated bound.
BvpParams validate_params(double alpha, double eta);

/// The piecewise Green's function G(t,s) on [0,1]^2. Branch conditions are
/// closed; on the seams s = t and s = eta adjacent branches agree.
double green(const BvpParams& p, double t, double s);

/// Upper envelope g(s) = (1-s)/(1 - alpha*eta) with 0 <= G(t,s) <= g(s).
double g_envelope(const BvpParams& p, double s);

/// Cone constant gamma = 1 - eta; G(t,s) >= gamma*g(s) on [0,eta]x[0,1].
double cone_gamma(const BvpParams& p);

}  // namespace bvp
