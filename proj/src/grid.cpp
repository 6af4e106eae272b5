#include "bvp/grid.hpp"

#include <cmath>

namespace bvp {

GridFunction GridFunction::constant(int n, double c) {
    GridFunction u{n, Eigen::VectorXd::Constant(n + 1, c)};
    u.check_valid();
    return u;
}

void GridFunction::check_valid() const {
    if (n < 16 || n % 2 != 0) {
        throw Error("grid size n must be >= 16 and even, got " + std::to_string(n));
    }
    if (values.size() != n + 1) {
        throw Error("grid function has " + std::to_string(values.size()) +
                    " values, expected " + std::to_string(n + 1));
    }
    if (!values.allFinite()) {
        throw Error("grid function contains non-finite values");
    }
}

double GridFunction::interp(double t) const {
    if (t <= 0.0) return values[0];
    if (t >= 1.0) return values[n];
    const double x = t * n;
    int i = static_cast<int>(x);
    if (i >= n) i = n - 1;
    const double w = x - i;
    return (1.0 - w) * values[i] + w * values[i + 1];
}

double integrate_grid(const GridFunction& u, double b) {
    const int n = u.n;
    const double h = u.h();
    const Eigen::VectorXd& v = u.values;
    if (b <= 0.0) return 0.0;
    if (b > 1.0) b = 1.0;

    int m = static_cast<int>(std::floor(b / h + 1e-12));
    if (m > n) m = n;
    double delta = b - m * h;
    if (delta < 1e-12 || m == n) delta = 0.0;

    double total = 0.0;
    if (m >= 1) {
        double trap = 0.5 * (v[0] + v[m]);
        for (int i = 1; i < m; ++i) trap += v[i];
        trap *= h;
        // Euler-Maclaurin endpoint correction with O(h^2) slopes.
        const double d0 = (-3.0 * v[0] + 4.0 * v[1] - v[2]) / (2.0 * h);
        const double dm = (m < n) ? (v[m + 1] - v[m - 1]) / (2.0 * h)
                                  : (3.0 * v[n] - 4.0 * v[n - 1] + v[n - 2]) / (2.0 * h);
        total = trap - h * h / 12.0 * (dm - d0);
    }
    if (delta > 0.0) {
        // Quadratic through the three nodes nearest t_m, integrated over
        // the partial cell [t_m, b].
        double c0, c1, c2;
        if (m == 0) {
            c0 = v[0];
            c1 = (-3.0 * v[0] + 4.0 * v[1] - v[2]) / (2.0 * h);
            c2 = (v[2] - 2.0 * v[1] + v[0]) / (2.0 * h * h);
        } else {
            c0 = v[m];
            c1 = (v[m + 1] - v[m - 1]) / (2.0 * h);
            c2 = (v[m + 1] - 2.0 * v[m] + v[m - 1]) / (2.0 * h * h);
        }
        total += c0 * delta + c1 * delta * delta / 2.0 + c2 * delta * delta * delta / 3.0;
    }
    return total;
}

}  // namespace bvp
