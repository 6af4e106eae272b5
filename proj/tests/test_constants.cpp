#include <doctest.h>

#include <cmath>
#include <random>

#include "bvp/constants.hpp"

using namespace bvp;

namespace {

Expression expr(const char* src) { return Expression::parse(src, "t"); }

}  // namespace

TEST_CASE("compute_lambda1") {
    QuadratureSettings q;
    CHECK(compute_lambda1(validate_params(2.0, 1.0 / 3.0), expr("1"), q) ==
          doctest::Approx(1.5).epsilon(1e-12));
    CHECK(compute_lambda1(validate_params(2.0, 1.0 / 3.0), expr("0"), q) ==
          doctest::Approx(0.0));
    CHECK(compute_lambda1(validate_params(1.0, 0.5), expr("1/5"), q) ==
          doctest::Approx(0.2).epsilon(1e-12));
}

TEST_CASE("compute_lambda2") {
    QuadratureSettings q;
    CHECK(compute_lambda2(validate_params(2.0, 1.0 / 3.0), expr("1"), q) ==
          doctest::Approx(40.0 / 81.0).epsilon(1e-12));
    CHECK(compute_lambda2(validate_params(1.0, 0.5), expr("1/5"), q) ==
          doctest::Approx(7.0 / 120.0).epsilon(1e-12));
    CHECK(compute_lambda2(validate_params(1.0, 0.5), expr("0"), q) == doctest::Approx(0.0));
}

TEST_CASE("lambda2 <= lambda1 for nonnegative weights") {
    QuadratureSettings q;
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const Expression weights[] = {expr("1"), expr("t"), expr("1+t^2"), expr("exp(-t)")};
    for (int trial = 0; trial < 20; ++trial) {
        const double eta = 0.1 + 0.8 * unit(rng);
        const BvpParams p = validate_params((0.05 + 0.9 * unit(rng)) / eta, eta);
        for (const Expression& a : weights) {
            const double l1 = compute_lambda1(p, a, q);
            const double l2 = compute_lambda2(p, a, q);
            CHECK(l2 <= l1 + 1e-10);
        }
    }
}

TEST_CASE("eigenvalue_interval reproduces the worked cases") {
    SUBCASE("Theorem 3.1 with finite asymptotes") {
        const LambdaInterval iv =
            eigenvalue_interval({1.5, 40.0 / 81.0}, AsymptoticValue::finite(0.5),
                                AsymptoticValue::finite(5.0));
        REQUIRE(iv.conclusive);
        CHECK(iv.source == LambdaInterval::Source::Theorem31);
        CHECK(iv.lo == doctest::Approx(81.0 / 200.0).epsilon(1e-14));
        CHECK_FALSE(iv.unbounded);
        CHECK(iv.hi == doctest::Approx(4.0 / 3.0).epsilon(1e-14));
    }

    SUBCASE("superlinear: (0, unbounded)") {
        const LambdaInterval iv = eigenvalue_interval(
            {1.5, 0.5}, AsymptoticValue::zero(), AsymptoticValue::infinite());
        REQUIRE(iv.conclusive);
        CHECK(iv.source == LambdaInterval::Source::Theorem31);
        CHECK(iv.lo == 0.0);
        CHECK(iv.unbounded);
    }

    SUBCASE("Theorem 3.2 with infinite f0") {
        const LambdaInterval iv = eigenvalue_interval(
            {1.5, 40.0 / 81.0}, AsymptoticValue::infinite(), AsymptoticValue::finite(5.0));
        REQUIRE(iv.conclusive);
        CHECK(iv.source == LambdaInterval::Source::Theorem32);
        CHECK(iv.lo == 0.0);
        CHECK_FALSE(iv.unbounded);
        CHECK(iv.hi == doctest::Approx(2.0 / 15.0).epsilon(1e-14));
    }

    SUBCASE("zero f0 with finite f_inf") {
        const LambdaInterval iv = eigenvalue_interval(
            {0.2, 7.0 / 120.0}, AsymptoticValue::zero(), AsymptoticValue::finite(1.0));
        REQUIRE(iv.conclusive);
        CHECK(iv.source == LambdaInterval::Source::Theorem31);
        CHECK(iv.lo == doctest::Approx(120.0 / 7.0).epsilon(1e-14));
        CHECK(iv.unbounded);
    }
}

TEST_CASE("eigenvalue_interval degenerate and inconclusive cases") {
    CHECK_FALSE(eigenvalue_interval({1.0, 0.0}, AsymptoticValue::zero(),
                                    AsymptoticValue::infinite())
                    .conclusive);
    // equal finite asymptotes with lambda2 < lambda1: neither condition holds
    CHECK_FALSE(eigenvalue_interval({1.5, 0.5}, AsymptoticValue::finite(1.0),
                                    AsymptoticValue::finite(1.0))
                    .conclusive);
    CHECK_FALSE(eigenvalue_interval({1.5, 0.5}, AsymptoticValue::zero(),
                                    AsymptoticValue::zero())
                    .conclusive);
    CHECK_FALSE(eigenvalue_interval({1.5, 0.5}, AsymptoticValue::infinite(),
                                    AsymptoticValue::infinite())
                    .conclusive);
}

TEST_CASE("theorem conditions are mutually exclusive and intervals are ordered") {
    std::mt19937_64 rng(22);
    std::uniform_real_distribution<double> unit(0.01, 1.0);
    for (int trial = 0; trial < 200; ++trial) {
        const double l1 = unit(rng) * 3.0;
        const double l2 = l1 * unit(rng);  // l2 <= l1
        const double f0 = unit(rng) * 10.0;
        double finf = unit(rng) * 10.0;
        if (finf == f0) finf += 0.5;
        const bool c31 = l1 * f0 < l2 * finf;
        const bool c32 = l1 * finf < l2 * f0;
        CHECK_FALSE((c31 && c32));
        const LambdaInterval iv = eigenvalue_interval(
            {l1, l2}, AsymptoticValue::finite(f0), AsymptoticValue::finite(finf));
        if (iv.conclusive && !iv.unbounded) {
            CHECK(iv.hi - iv.lo >= 1e-15);
        }
    }
}

TEST_CASE("scaling the weight scales the constants and shrinks the interval") {
    QuadratureSettings q;
    const BvpParams p = validate_params(2.0, 1.0 / 3.0);
    const double c = 3.7;
    const double l1 = compute_lambda1(p, expr("1+t"), q);
    const double l2 = compute_lambda2(p, expr("1+t"), q);
    const double l1c = compute_lambda1(p, expr("3.7*(1+t)"), q);
    const double l2c = compute_lambda2(p, expr("3.7*(1+t)"), q);
    CHECK(l1c == doctest::Approx(c * l1).epsilon(1e-10));
    CHECK(l2c == doctest::Approx(c * l2).epsilon(1e-10));

    const auto f0 = AsymptoticValue::finite(0.5);
    const auto finf = AsymptoticValue::finite(5.0);
    const LambdaInterval iv = eigenvalue_interval({l1, l2}, f0, finf);
    const LambdaInterval ivc = eigenvalue_interval({l1c, l2c}, f0, finf);
    REQUIRE(iv.conclusive);
    REQUIRE(ivc.conclusive);
    CHECK(ivc.lo == doctest::Approx(iv.lo / c).epsilon(1e-10));
    CHECK(ivc.hi == doctest::Approx(iv.hi / c).epsilon(1e-10));
}
