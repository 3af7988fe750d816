#pragma once

#include <cmath>
#include <utility>

namespace abc {

struct GoldenSectionResult {
    double x = 0;
    double value = 0;
    int iterations = 0;
};

/// Golden-section search for the minimum of a unimodal function on [lo, hi].
/// Shrinks the bracket until its width drops below xtol (or max_iter is hit)
/// and evaluates once per iteration by reusing the interior point.
template <class F>
GoldenSectionResult golden_section_minimize(F&& f, double lo, double hi, double xtol, int max_iter = 400) {
    static const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;

    double x1 = hi - inv_phi * (hi - lo);
    double x2 = lo + inv_phi * (hi - lo);
    double f1 = f(x1);
    double f2 = f(x2);
    int iter = 0;
    while (hi - lo > xtol && iter < max_iter) {
        if (f1 < f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = f(x2);
        }
        ++iter;
    }
    const double x = (lo + hi) / 2.0;
    return {x, f(x), iter};
}

/// Golden-section search for the maximum of a unimodal function on [lo, hi].
template <class F>
GoldenSectionResult golden_section_maximize(F&& f, double lo, double hi, double xtol, int max_iter = 400) {
    auto res = golden_section_minimize([&](double x) { return -f(x); }, lo, hi, xtol, max_iter);
    res.value = -res.value;
    return res;
}

}  // namespace abc
