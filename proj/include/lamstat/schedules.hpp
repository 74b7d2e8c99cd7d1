#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "lamstat/error.hpp"

namespace lamstat {

// Trailing index window [lo, hi], 1-based inclusive.
struct IndexWindow {
    std::size_t lo = 1;
    std::size_t hi = 1;
    std::size_t count() const noexcept { return hi - lo + 1; }
};

/// Weight sequence lambda_1..lambda_N with lambda_1 = 1, non-decreasing,
/// increments at most 1. Window at n covers the integers k with
/// n - lambda_n + 1 <= k <= n; all normalizations divide by lambda_n itself
/// (which may be non-integer).
class LambdaSchedule {
public:
    static LambdaSchedule validate(std::vector<double> values, std::string name = "custom");

    // built-ins
    static LambdaSchedule identity(std::size_t n);     // lambda_k = k
    static LambdaSchedule floor_sqrt(std::size_t n);   // lambda_k = max(1, floor(sqrt(k)))
    static LambdaSchedule log2_based(std::size_t n);   // lambda_k = max(1, floor(log2(k+1)))
    static LambdaSchedule built_in(std::string_view id, std::size_t n);
    static bool is_built_in(std::string_view id);

    std::size_t size() const noexcept { return values_.size(); }
    double lambda(std::size_t n) const;   // 1-based, throws OutOfRange
    IndexWindow window(std::size_t n) const;

    const std::vector<double>& values() const noexcept { return values_; }
    const std::string& name() const noexcept { return name_; }

    // "tending to infinity" is advisory on a finite prefix: set when
    // lambda_N < log(N), never an error.
    bool growth_warning() const noexcept { return growth_warning_; }

private:
    LambdaSchedule(std::vector<double> values, std::string name, bool warn)
        : values_(std::move(values)), name_(std::move(name)), growth_warning_(warn) {}

    std::vector<double> values_;
    std::string name_;
    bool growth_warning_ = false;
};

/// Lacunary cut points theta = (k_r) with k_0 = 0, strictly increasing.
/// Window r is (k_{r-1}, k_r], length h_r, ratio q_r = k_r / k_{r-1} for r >= 2.
class LacunarySchedule {
public:
    static LacunarySchedule validate(std::vector<std::size_t> cuts, double regularity_margin = 0.0);
    static LacunarySchedule doubling(std::size_t window_count); // cuts 0, 2, 4, 8, ...

    std::size_t window_count() const noexcept { return cuts_.size() - 1; } // R
    IndexWindow window(std::size_t r) const;            // 1-based r
    std::size_t length(std::size_t r) const;            // h_r
    double ratio(std::size_t r) const;                  // q_r, r >= 2
    std::size_t max_index() const noexcept { return cuts_.back(); } // k_R

    const std::vector<std::size_t>& cuts() const noexcept { return cuts_; }
    double regularity_margin() const noexcept { return margin_; }
    bool regular_flag() const noexcept { return regular_; }

private:
    LacunarySchedule(std::vector<std::size_t> cuts, double margin, bool regular)
        : cuts_(std::move(cuts)), margin_(margin), regular_(regular) {}

    std::vector<std::size_t> cuts_;
    double margin_;
    bool regular_;
};

} // namespace lamstat
