#include "bvp/constants.hpp"

namespace bvp {

namespace {

// Symbolic product L * v where v is an extended value. Requires L > 0,
// so the product inherits v's kind.
AsymptoticValue scaled(double lambda_const, const AsymptoticValue& v) {
    if (v.kind == AsymptoticValue::Kind::Finite) {
        return lambda_const > 0.0 ? AsymptoticValue::finite(lambda_const * v.value)
                                  : AsymptoticValue::zero();
    }
    return v;
}

// Strict order on extended values: Zero < any positive finite < Infinite.
bool less(const AsymptoticValue& a, const AsymptoticValue& b) {
    using K = AsymptoticValue::Kind;
    if (a.kind == K::Zero) return b.kind != K::Zero;
    if (a.kind == K::Infinite) return false;
    if (b.kind == K::Infinite) return true;
    if (b.kind == K::Zero) return false;
    return a.value < b.value;
}

// Lower endpoint 1/x with 1/Infinite = 0; x is never Zero when a theorem fires.
double reciprocal_lo(const AsymptoticValue& x) {
    return x.kind == AsymptoticValue::Kind::Infinite ? 0.0 : 1.0 / x.value;
}

LambdaInterval make_interval(const AsymptoticValue& lo_prod, const AsymptoticValue& hi_prod,
                             LambdaInterval::Source src) {
    LambdaInterval iv;
    iv.conclusive = true;
    iv.source = src;
    iv.lo = reciprocal_lo(lo_prod);
    if (hi_prod.kind == AsymptoticValue::Kind::Zero) {
        iv.unbounded = true;
    } else {
        iv.hi = 1.0 / hi_prod.value;
        if (!(iv.hi - iv.lo >= 1e-15)) {
            return LambdaInterval{};  // endpoints not strictly separated
        }
    }
    return iv;
}

}  // namespace

double compute_lambda1(const BvpParams& p, const Expression& a,
                       const QuadratureSettings& q) {
    const double pre = 1.0 / (1.0 - p.alpha * p.eta);
    return pre * integrate([&a](double s) { return (1.0 - s) * a.eval(s); }, 0.0, 1.0, q);
}

double compute_lambda2(const BvpParams& p, const Expression& a,
                       const QuadratureSettings& q) {
    const double alpha = p.alpha;
    const double eta = p.eta;
    const double pre = (1.0 - eta) / (2.0 * (1.0 - alpha * eta));
    return pre * integrate(
                     [&](double s) {
                         return (2.0 * (1.0 - eta) + alpha * (eta * eta - s * s)) * a.eval(s);
                     },
                     0.0, eta, q);
}

LambdaInterval eigenvalue_interval(const LambdaConstants& c, const AsymptoticValue& f0,
                                   const AsymptoticValue& finf) {
    using K = AsymptoticValue::Kind;
    // Degenerate weight: a vanishes on [0,eta].
    if (c.lambda2 <= 0.0) {
        return LambdaInterval{};
    }
    // 0*inf products are undecidable; declare inconclusive.
    if (c.lambda1 <= 0.0 && (f0.kind == K::Infinite || finf.kind == K::Infinite)) {
        return LambdaInterval{};
    }

    const AsymptoticValue l1f0 = scaled(c.lambda1, f0);
    const AsymptoticValue l2finf = scaled(c.lambda2, finf);
    if (less(l1f0, l2finf)) {
        return make_interval(l2finf, l1f0, LambdaInterval::Source::Theorem31);
    }
    const AsymptoticValue l1finf = scaled(c.lambda1, finf);
    const AsymptoticValue l2f0 = scaled(c.lambda2, f0);
    if (less(l1finf, l2f0)) {
        return make_interval(l2f0, l1finf, LambdaInterval::Source::Theorem32);
    }
    return LambdaInterval{};
}

}  // namespace bvp
