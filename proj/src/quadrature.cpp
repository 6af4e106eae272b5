#include "bvp/quadrature.hpp"

#include <algorithm>
#include <cmath>

namespace bvp {

namespace {

double simpson(double fa, double fm, double fb, double width) {
    return width / 6.0 * (fa + 4.0 * fm + fb);
}

double adapt(const Integrand& h, double a, double b, double fa, double fm, double fb,
             double whole, double tol, int depth, const QuadratureSettings& q) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = h(lm);
    const double frm = h(rm);
    const double left = simpson(fa, flm, fm, m - a);
    const double right = simpson(fm, frm, fb, b - m);
    const double err = (left + right - whole) / 15.0;
    if (std::fabs(err) <= tol) {
        return left + right + err;  // Richardson correction
    }
    if (depth >= q.max_depth) {
        throw DepthExceeded(left + right + err, std::fabs(err));
    }
    return adapt(h, a, m, fa, flm, fm, left, 0.5 * tol, depth + 1, q) +
           adapt(h, m, b, fm, frm, fb, right, 0.5 * tol, depth + 1, q);
}

}  // namespace

double integrate(const Integrand& h, double a, double b, const QuadratureSettings& q) {
    if (a == b) {
        return 0.0;
    }
    const double fa = h(a);
    const double m = 0.5 * (a + b);
    const double fm = h(m);
    const double fb = h(b);
    const double whole = simpson(fa, fm, fb, b - a);
    return adapt(h, a, b, fa, fm, fb, whole, q.abs_tol, 0, q);
}

double integrate_split(const Integrand& h, double a, double b,
                       const std::vector<double>& seams, const QuadratureSettings& q) {
    // Each piece gets a tolerance share proportional to its length so the
    // summed error stays within abs_tol.
    const double span = b - a;
    auto piece = [&](double lo, double hi) {
        QuadratureSettings local = q;
        if (span > 0.0) {
            local.abs_tol = q.abs_tol * (hi - lo) / span;
        }
        return integrate(h, lo, hi, local);
    };
    double total = 0.0;
    double left = a;
    for (double s : seams) {
        if (s <= left || s >= b) {
            continue;
        }
        total += piece(left, s);
        left = s;
    }
    total += piece(left, b);
    return total;
}

}  // namespace bvp
