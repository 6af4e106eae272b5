#include "bvp/kernel.hpp"

#include <algorithm>
#include <string>

namespace bvp {

BvpParams validate_params(double alpha, double eta) {
    if (!(eta > 0.0 && eta < 1.0)) {
        throw OutOfRange("eta = " + std::to_string(eta) +
                         " violates 0 < eta < 1 (strict)");
    }
    if (!(alpha > 0.0 && alpha < 1.0 / eta)) {
        throw OutOfRange("alpha = " + std::to_string(alpha) +
                         " violates 0 < alpha < 1/eta = " + std::to_string(1.0 / eta) +
                         " (strict)");
    }
    return BvpParams{alpha, eta};
}

double green(const BvpParams& p, double t, double s) {
    const double alpha = p.alpha;
    const double eta = p.eta;
    const double denom = 2.0 * (1.0 - alpha * eta);

    // Closed branch conditions, first match wins; branches agree on seams.
    if (s <= eta && s <= t) {
        const double d = eta - s;
        return (2.0 * (1.0 - s) - alpha * d * d - (denom) * (t - s)) / denom;
    }
    if (t <= s && s <= eta) {
        const double d = eta - s;
        return (2.0 * (1.0 - s) - alpha * d * d) / denom;
    }
    if (eta <= s && s <= t) {
        return (2.0 * (1.0 - s) - denom * (t - s)) / denom;
    }
    return 2.0 * (1.0 - s) / denom;
}

double g_envelope(const BvpParams& p, double s) {
    return (1.0 - s) / (1.0 - p.alpha * p.eta);
}

double cone_gamma(const BvpParams& p) {
    return 1.0 - p.eta;
}

}  // namespace bvp
