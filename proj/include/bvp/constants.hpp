#pragma once

#include <optional>
#include <string>

#include "bvp/exprlang.hpp"
#include "bvp/kernel.hpp"
#include "bvp/quadrature.hpp"

namespace bvp {

/// Three-way value for the limits f0 = lim_{u->0+} f(u)/u and
/// f_inf = lim_{u->inf} f(u)/u.
struct AsymptoticValue {
    enum class Kind { Zero, Finite, Infinite };
    Kind kind;
    double value = 0.0;  // meaningful iff kind == Finite (then > 0)

    static AsymptoticValue zero() { return {Kind::Zero}; }
    static AsymptoticValue infinite() { return {Kind::Infinite}; }
    static AsymptoticValue finite(double v) { return {Kind::Finite, v}; }
};

struct LambdaConstants {
    double lambda1;
    double lambda2;
};

/// Open interval of lambda values for which a positive solution is
/// guaranteed, tagged by the theorem that produced it. When neither
/// theorem applies the interval is inconclusive and carries no endpoints.
struct LambdaInterval {
    enum class Source { Theorem31, Theorem32 };
    bool conclusive = false;
    double lo = 0.0;
    double hi = 0.0;      // meaningful iff !unbounded
    bool unbounded = false;
    Source source = Source::Theorem31;
};

/// Lambda1 = 1/(1 - alpha*eta) * int_0^1 (1-s) a(s) ds
double compute_lambda1(const BvpParams& p, const Expression& a,
                       const QuadratureSettings& q);

/// Lambda2 = gamma/(2(1 - alpha*eta)) * int_0^eta (2(1-eta) + alpha(eta^2 - s^2)) a(s) ds
double compute_lambda2(const BvpParams& p, const Expression& a,
                       const QuadratureSettings& q);

/// Decides which theorem (if any) applies and returns the guaranteed
/// lambda interval, using the conventions 1/(L*inf) = 0 and
/// 1/(L*0) = unbounded. Products 0*inf (a Lambda of zero against an
/// infinite asymptote) and a vanishing Lambda2 yield an inconclusive
/// result rather than an error.
LambdaInterval eigenvalue_interval(const LambdaConstants& c, const AsymptoticValue& f0,
                                   const AsymptoticValue& finf);

}  // namespace bvp
