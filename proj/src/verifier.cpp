#include "bvp/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace bvp {

std::pair<bool, double> cone_membership(const GridFunction& u, double gamma, double eta) {
    const Eigen::VectorXd& v = u.values;
    double min_on_front = std::numeric_limits<double>::infinity();
    double min_all = std::numeric_limits<double>::infinity();
    double max_all = 0.0;
    for (int i = 0; i <= u.n; ++i) {
        const double x = v[i];
        min_all = std::min(min_all, x);
        max_all = std::max(max_all, x);
        if (u.node(i) <= eta) {
            min_on_front = std::min(min_on_front, x);
        }
    }
    const double margin = min_on_front - gamma * max_all;
    const bool member = min_all >= 0.0 && margin >= 0.0;
    return {member, margin};
}

VerificationReport verify(const BvpParams& p, const Expression& a, const Expression& f,
                          double lambda, const GridFunction& u,
                          const VerifyTolerances& tols) {
    u.check_valid();
    const int n = u.n;
    const double h = u.h();
    const Eigen::VectorXd& v = u.values;

    double ode_sup = 0.0;
    double rhs_sup = 0.0;
    for (int i = 1; i < n; ++i) {
        const double t = u.node(i);
        const double rhs = lambda * a.eval(t) * f.eval(v[i]);
        rhs_sup = std::max(rhs_sup, std::fabs(rhs));
        const double upp = (v[i - 1] - 2.0 * v[i] + v[i + 1]) / (h * h);
        ode_sup = std::max(ode_sup, std::fabs(upp + rhs));
    }

    const double neumann = std::fabs((-3.0 * v[0] + 4.0 * v[1] - v[2]) / (2.0 * h));
    const double integral = std::fabs(v[n] - p.alpha * integrate_grid(u, p.eta));
    const auto [member, margin] = cone_membership(u, cone_gamma(p), p.eta);
    (void)member;

    VerificationReport rep;
    rep.ode_residual_sup = ode_sup;
    rep.bc_neumann = neumann;
    rep.bc_integral = integral;
    rep.cone_margin = margin;
    rep.tols = tols;
    rep.ode_tolerance = tols.ode * (1.0 + rhs_sup);
    rep.passed = ode_sup <= rep.ode_tolerance && neumann <= tols.bc_neumann &&
                 integral <= tols.bc_integral && margin >= tols.cone;
    return rep;
}

}  // namespace bvp
