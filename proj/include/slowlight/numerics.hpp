#pragma once

#include <cstddef>
#include <span>

namespace slowlight {

// Pairwise (cascade) summation. Fixed association order, so reductions are
// bit-stable regardless of how callers partition surrounding work.
inline double pairwise_sum(std::span<const double> v) {
    const std::size_t n = v.size();
    if (n <= 32) {
        double s = 0.0;
        for (double x : v) s += x;
        return s;
    }
    const std::size_t half = n / 2;
    return pairwise_sum(v.first(half)) + pairwise_sum(v.subspan(half));
}

// Composite trapezoidal rule on a uniform grid with spacing h.
inline double trapezoid_uniform(std::span<const double> f, double h) {
    if (f.size() < 2) return 0.0;
    return h * (pairwise_sum(f) - 0.5 * (f.front() + f.back()));
}

}  // namespace slowlight
