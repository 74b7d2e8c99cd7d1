#pragma once

// Test-only oracles and data builders. The counting oracles recount every
// window from scratch, independent of the library's sliding-window path.

#include <cmath>
#include <cstdint>
#include <vector>

#include "lamstat/rng.hpp"
#include "lamstat/schedules.hpp"
#include "lamstat/sequence.hpp"

namespace testutil {

// |{k in window(n) : |x_k - L| >= eps}| by direct recount
inline std::size_t naive_window_count(const lamstat::SequencePrefix& x,
                                      const lamstat::LambdaSchedule& s, std::size_t n,
                                      double center, double eps) {
    const lamstat::IndexWindow w = s.window(n);
    std::size_t count = 0;
    for (std::size_t k = w.lo; k <= w.hi; ++k) {
        if (std::abs(x.value(k) - center) >= eps) ++count;
    }
    return count;
}

inline std::size_t naive_range_count(const lamstat::SequencePrefix& x, std::size_t lo,
                                     std::size_t hi, double center, double eps) {
    std::size_t count = 0;
    for (std::size_t k = lo; k <= hi; ++k) {
        if (std::abs(x.value(k) - center) >= eps) ++count;
    }
    return count;
}

inline std::vector<double> random_values(std::size_t n, std::uint64_t seed, double lo = -1.0,
                                         double hi = 1.0) {
    lamstat::SplitMix64 rng(lamstat::SplitMix64::mix(seed));
    std::vector<double> v(n);
    for (auto& x : v) x = lo + (hi - lo) * rng.next_unit();
    return v;
}

inline lamstat::SequencePrefix random_prefix(std::size_t n, std::uint64_t seed) {
    return lamstat::SequencePrefix::from(random_values(n, seed));
}

// x_k = 1 exactly when k is a perfect square, else 0
inline lamstat::SequencePrefix square_indicator(std::size_t n) {
    std::vector<double> v(n, 0.0);
    for (std::size_t r = 1; r * r <= n; ++r) v[r * r - 1] = 1.0;
    return lamstat::SequencePrefix::from(std::move(v));
}

// random walk with steps shrinking like 1/k: quasi-Cauchy by construction
inline lamstat::SequencePrefix qc_walk(std::size_t n, std::uint64_t seed, double scale = 1.0) {
    lamstat::SplitMix64 rng(lamstat::SplitMix64::mix(seed ^ 0x9c1eull));
    std::vector<double> v(n);
    double x = rng.next_unit();
    for (std::size_t k = 0; k < n; ++k) {
        v[k] = x;
        x += (2.0 * rng.next_unit() - 1.0) * scale / static_cast<double>(k + 1);
    }
    return lamstat::SequencePrefix::from(std::move(v));
}

} // namespace testutil
