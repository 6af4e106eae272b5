#pragma once

#include "bvp/exprlang.hpp"
#include "bvp/grid.hpp"
#include "bvp/kernel.hpp"

namespace bvp {

struct VerifyTolerances {
    double ode = 1e-4;       // scaled by (1 + lambda*||a f(u)||_sup)
    double bc_neumann = 1e-6;
    double bc_integral = 1e-8;
    double cone = -1e-9;     // minimum admissible cone margin
};

/// Independent residual check of a candidate solution. Consults only
/// (p, a, f, lambda, u) — never the solver's internals.
struct VerificationReport {
    double ode_residual_sup;  // sup over interior nodes of |u'' + lambda a f(u)|
    double bc_neumann;        // |u'(0)| via one-sided O(h^2) difference
    double bc_integral;       // |u(1) - alpha * int_0^eta u|
    double cone_margin;       // min_{[0,eta]} u - gamma*||u||
    double ode_tolerance;     // the scaled ODE tolerance actually applied
    VerifyTolerances tols;
    bool passed;
};

VerificationReport verify(const BvpParams& p, const Expression& a, const Expression& f,
                          double lambda, const GridFunction& u,
                          const VerifyTolerances& tols = {});

/// Cone membership test: u >= 0 everywhere and
/// min over nodes with t_i <= eta of u(t_i) >= gamma * ||u||.
/// Returns (member, margin) with margin = min_{[0,eta]} u - gamma*||u||.
std::pair<bool, double> cone_membership(const GridFunction& u, double gamma, double eta);

}  // namespace bvp
