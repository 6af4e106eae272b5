#include <doctest.h>

#include <cmath>
#include <random>

#include "bvp/solver.hpp"

using namespace bvp;

namespace {

Expression in_t(const char* src) { return Expression::parse(src, "t"); }
Expression in_u(const char* src) { return Expression::parse(src, "u"); }

// Random cone member: values in [gamma*M, M] on [0,eta], in [0, M] beyond.
GridFunction random_cone_member(int n, double gamma, double eta, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double M = 0.2 + 5.0 * unit(rng);
    GridFunction u{n, Eigen::VectorXd(n + 1)};
    bool placed_max = false;
    for (int i = 0; i <= n; ++i) {
        if (u.node(i) <= eta) {
            u.values[i] = M * (gamma + (1.0 - gamma) * unit(rng));
        } else {
            u.values[i] = M * unit(rng);
            placed_max = true;
        }
    }
    (void)placed_max;
    return u;
}

}  // namespace

TEST_CASE("apply_operator with f == 0 returns the zero function") {
    const BvpParams p = validate_params(1.0, 0.5);
    const GridFunction u = GridFunction::constant(32, 1.0);
    const GridFunction v =
        apply_operator(p, in_t("1"), in_u("0*u"), 2.5, u, QuadratureSettings{});
    CHECK(v.values.cwiseAbs().maxCoeff() == doctest::Approx(0.0));
}

TEST_CASE("apply_operator reproduces the closed-form constant-load solution") {
    // u'' + 1 = 0, u'(0) = 0, u(1) = int_0^{1/2} u  =>  u(t) = 23/24 - t^2/2
    const BvpParams p = validate_params(1.0, 0.5);
    const GridFunction u = GridFunction::constant(64, 0.3);  // any input
    const GridFunction v =
        apply_operator(p, in_t("1"), in_u("u*0+1"), 1.0, u, QuadratureSettings{});
    for (int i = 0; i <= v.n; ++i) {
        const double t = v.node(i);
        CHECK(v.values[i] == doctest::Approx(23.0 / 24.0 - t * t / 2.0).epsilon(1e-9));
    }
    CHECK(v.values[0] == doctest::Approx(23.0 / 24.0).epsilon(1e-9));
}

TEST_CASE("apply_operator is linear in lambda") {
    const BvpParams p = validate_params(2.0, 0.25);
    GridFunction u = GridFunction::constant(32, 1.0);
    for (int i = 0; i <= u.n; ++i) u.values[i] += 0.3 * u.node(i);
    const QuadratureSettings q;
    const Expression a = in_t("1+t");
    const Expression f = in_u("u^2+1");
    const GridFunction v1 = apply_operator(p, a, f, 0.7, u, q);
    const GridFunction v2 = apply_operator(p, a, f, 1.4, u, q);
    for (int i = 0; i <= u.n; ++i) {
        CHECK(v2.values[i] == doctest::Approx(2.0 * v1.values[i]).epsilon(1e-12));
    }
}

TEST_CASE("cone_membership") {
    SUBCASE("constant function is a member") {
        const auto [member, margin] = cone_membership(GridFunction::constant(32, 1.0), 0.5, 0.5);
        CHECK(member);
        CHECK(margin == doctest::Approx(0.5));
    }

    SUBCASE("identity vanishes at 0 and is not a member") {
        GridFunction u{32, Eigen::VectorXd(33)};
        for (int i = 0; i <= 32; ++i) u.values[i] = u.node(i);
        const auto [member, margin] = cone_membership(u, 0.5, 0.5);
        CHECK_FALSE(member);
        CHECK(margin < 0.0);
    }

    SUBCASE("closed-form solution margin") {
        GridFunction u{48, Eigen::VectorXd(49)};
        for (int i = 0; i <= 48; ++i) {
            const double t = u.node(i);
            u.values[i] = 23.0 / 24.0 - t * t / 2.0;
        }
        const auto [member, margin] = cone_membership(u, 0.5, 0.5);
        CHECK(member);
        CHECK(margin == doctest::Approx(17.0 / 48.0).epsilon(1e-12));
    }
}

TEST_CASE("the operator maps the cone into itself") {
    const BvpParams p = validate_params(2.0, 1.0 / 3.0);
    const double gamma = cone_gamma(p);
    const Expression a = in_t("1");
    const Expression f = in_u("5*u*exp(2*u)/(8+exp(u)+exp(2*u))");
    const QuadratureSettings q;
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 10; ++trial) {
        const GridFunction u = random_cone_member(36, gamma, p.eta, rng);
        const GridFunction v = apply_operator(p, a, f, 0.8, u, q);
        const auto [member, margin] = cone_membership(v, gamma, p.eta);
        CHECK(margin >= -1e-9);
        CHECK(v.values.minCoeff() >= -1e-12);
    }
}

TEST_CASE("picard_solve returns Trivial for f == 0") {
    const BvpParams p = validate_params(1.0, 0.5);
    SolveSettings s;
    s.grid_n = 32;
    const SolveOutcome out =
        picard_solve(p, in_t("1"), in_u("0*u"), 1.0, s, QuadratureSettings{});
    CHECK(out.status == SolveStatus::Trivial);
}

TEST_CASE("subcritical linear problem contracts to the trivial solution") {
    // power-iteration oracle for the spectral radius of u -> int G(t,s) u(s) ds
    const BvpParams p = validate_params(1.0, 0.5);
    const Expression a = in_t("1");
    const Expression f = in_u("u");
    const QuadratureSettings q{1e-9, 40};
    const double lambda = 0.1;

    GridFunction v = GridFunction::constant(32, 1.0);
    double rho = 0.0;
    for (int k = 0; k < 30; ++k) {
        GridFunction w = apply_operator(p, a, f, 1.0, v, q);
        rho = w.sup_norm();
        v.values = w.values / rho;
    }
    CHECK(lambda * rho < 1.0);  // oracle predicts contraction to zero

    SolveSettings s;
    s.grid_n = 32;
    s.max_iters = 3000;
    const SolveOutcome out = picard_solve(p, a, f, lambda, s, q);
    CHECK(out.status == SolveStatus::Trivial);
}

TEST_CASE("picard_solve finds a verified positive solution in the guaranteed interval") {
    // lambda = 0.8 lies in (81/200, 4/3)
    const BvpParams p = validate_params(2.0, 1.0 / 3.0);
    const Expression a = in_t("1");
    const Expression f = in_u("5*u*exp(2*u)/(8+exp(u)+exp(2*u))");
    const QuadratureSettings q{1e-9, 40};
    SolveSettings s;
    s.grid_n = 64;
    s.conv_tol = 1e-9;
    const SolveOutcome out = picard_solve(p, a, f, 0.8, s, q);
    REQUIRE(out.status == SolveStatus::Solved);
    CHECK(out.report.passed);
    CHECK(out.solution.sup_norm() > 1e-3);

    // genuine approximate fixed point
    const GridFunction au = apply_operator(p, a, f, 0.8, out.solution, q);
    const double drift = (au.values - out.solution.values).cwiseAbs().maxCoeff();
    CHECK(drift <= 10.0 * s.conv_tol * out.solution.sup_norm());
}
