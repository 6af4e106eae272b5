#include "bvp/asymptotics.hpp"

#include <cmath>

namespace bvp {

namespace {

// Aitken delta-squared extrapolation of the last three values; falls back
// to the last value when fewer than three are available or the second
// difference vanishes.
double extrapolate(const std::vector<double>& r) {
    const std::size_t n = r.size();
    if (n < 3) {
        return r.back();
    }
    const double d1 = r[n - 2] - r[n - 3];
    const double d2 = r[n - 1] - r[n - 2];
    const double dd = d2 - d1;
    if (std::fabs(dd) < 1e-300) {
        return r.back();
    }
    return r[n - 1] - d2 * d2 / dd;
}

bool non_increasing_tail(const std::vector<double>& r) {
    const std::size_t n = r.size();
    for (std::size_t i = (n > 3 ? n - 3 : 0) + 1; i < n; ++i) {
        if (r[i] > r[i - 1]) return false;
    }
    return true;
}

bool non_decreasing_tail(const std::vector<double>& r) {
    const std::size_t n = r.size();
    for (std::size_t i = (n > 3 ? n - 3 : 0) + 1; i < n; ++i) {
        if (r[i] < r[i - 1]) return false;
    }
    return true;
}

AsymptoticEstimate classify(const Expression& f, bool towards_zero) {
    AsymptoticEstimate est;
    std::vector<double> ratios;
    for (int k = 1; k <= 8; ++k) {
        const double u = towards_zero ? std::pow(10.0, -k) : std::pow(10.0, k);
        double r;
        try {
            r = f.eval(u) / u;
        } catch (const EvalError&) {
            est.notes.push_back("sample at u=1e" + std::string(towards_zero ? "-" : "+") +
                                std::to_string(k) + " raised a domain fault; discarded");
            continue;
        }
        if (!std::isfinite(r)) {
            est.notes.push_back("sample at u=1e" + std::string(towards_zero ? "-" : "+") +
                                std::to_string(k) + " overflowed; discarded");
            continue;
        }
        est.samples.emplace_back(u, r);
        ratios.push_back(r);
    }

    if (ratios.empty()) {
        // f/u blows up (or faults) at every sample point.
        est.value = AsymptoticValue::infinite();
        est.confident = false;
        est.notes.push_back("no finite samples; classified Infinite");
        return est;
    }

    const bool dec = non_increasing_tail(ratios);
    const bool inc = non_decreasing_tail(ratios);
    est.confident = dec || inc;

    const double last = ratios.back();
    const double extrap = extrapolate(ratios);

    if (dec && (last < 1e-6 || std::fabs(extrap) < 1e-6)) {
        est.value = AsymptoticValue::zero();
        return est;
    }
    if (inc) {
        std::vector<double> recip;
        recip.reserve(ratios.size());
        for (double r : ratios) {
            recip.push_back(r > 0.0 ? 1.0 / r : 0.0);
        }
        if (last > 1e6 || std::fabs(extrapolate(recip)) < 1e-6) {
            est.value = AsymptoticValue::infinite();
            return est;
        }
    }
    est.value = AsymptoticValue::finite(extrap > 0.0 ? extrap : last);
    return est;
}

}  // namespace

AsymptoticEstimate estimate_f0(const Expression& f) {
    return classify(f, /*towards_zero=*/true);
}

AsymptoticEstimate estimate_finf(const Expression& f) {
    return classify(f, /*towards_zero=*/false);
}

}  // namespace bvp
