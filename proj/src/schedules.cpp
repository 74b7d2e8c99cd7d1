#include "lamstat/schedules.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace lamstat {

namespace {

bool growth_ok(double lambda_last, std::size_t n) {
    // advisory only: lambda_N >= log(N) counts as "plausibly tending to inf"
    return lambda_last >= std::log(static_cast<double>(n));
}

} // namespace

LambdaSchedule LambdaSchedule::validate(std::vector<double> values, std::string name) {
    if (values.empty()) {
        throw Error(ErrorCode::EmptySequence, "lambda schedule must be non-empty");
    }
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!std::isfinite(values[i]) || values[i] <= 0.0) {
            throw Error(ErrorCode::NonPositive,
                        "lambda_" + std::to_string(i + 1) + " must be a positive real", i + 1);
        }
    }
    if (values[0] != 1.0) {
        throw Error(ErrorCode::FirstNotOne, "lambda_1 must equal 1", 1);
    }
    for (std::size_t i = 0; i + 1 < values.size(); ++i) {
        if (values[i + 1] < values[i]) {
            throw Error(ErrorCode::Decreasing,
                        "lambda_" + std::to_string(i + 2) + " < lambda_" + std::to_string(i + 1),
                        i + 1);
        }
        if (values[i + 1] > values[i] + 1.0) {
            throw Error(ErrorCode::JumpTooBig,
                        "lambda_" + std::to_string(i + 2) + " exceeds lambda_" +
                            std::to_string(i + 1) + " + 1",
                        i + 1);
        }
    }
    // lambda_n <= n is implied by the increment bound; assert directly anyway
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i] > static_cast<double>(i + 1)) {
            throw Error(ErrorCode::JumpTooBig,
                        "lambda_" + std::to_string(i + 1) + " exceeds its index", i + 1);
        }
    }
    const bool warn = !growth_ok(values.back(), values.size());
    return LambdaSchedule(std::move(values), std::move(name), warn);
}

LambdaSchedule LambdaSchedule::identity(std::size_t n) {
    std::vector<double> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<double>(i + 1);
    return validate(std::move(v), "identity");
}

LambdaSchedule LambdaSchedule::floor_sqrt(std::size_t n) {
    std::vector<double> v(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto k = static_cast<double>(i + 1);
        v[i] = std::max(1.0, std::floor(std::sqrt(k)));
    }
    return validate(std::move(v), "floor-sqrt");
}

LambdaSchedule LambdaSchedule::log2_based(std::size_t n) {
    std::vector<double> v(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto k = static_cast<double>(i + 1);
        v[i] = std::max(1.0, std::floor(std::log2(k + 1.0)));
    }
    return validate(std::move(v), "log2");
}

bool LambdaSchedule::is_built_in(std::string_view id) {
    return id == "identity" || id == "floor-sqrt" || id == "sqrt" || id == "log2";
}

LambdaSchedule LambdaSchedule::built_in(std::string_view id, std::size_t n) {
    if (n == 0) throw Error(ErrorCode::EmptySequence, "schedule length must be positive");
    if (id == "identity") return identity(n);
    if (id == "floor-sqrt" || id == "sqrt") return floor_sqrt(n);
    if (id == "log2") return log2_based(n);
    throw Error(ErrorCode::BadConfig, "unknown built-in schedule id: " + std::string(id));
}

double LambdaSchedule::lambda(std::size_t n) const {
    if (n < 1 || n > values_.size()) {
        throw Error(ErrorCode::OutOfRange, "schedule index " + std::to_string(n) + " out of range",
                    n);
    }
    return values_[n - 1];
}

IndexWindow LambdaSchedule::window(std::size_t n) const {
    const double lam = lambda(n); // range check
    // smallest integer k with k >= n - lambda_n + 1; lambda_n <= n keeps lo >= 1
    const double lo_real = static_cast<double>(n) - lam + 1.0;
    auto lo = static_cast<std::size_t>(std::ceil(lo_real));
    if (lo < 1) lo = 1;
    return IndexWindow{lo, n};
}

LacunarySchedule LacunarySchedule::validate(std::vector<std::size_t> cuts,
                                            double regularity_margin) {
    if (cuts.empty()) {
        throw Error(ErrorCode::EmptySequence, "cut list must be non-empty");
    }
    if (cuts[0] != 0) {
        throw Error(ErrorCode::FirstNotZero, "k_0 must equal 0", 1);
    }
    if (cuts.size() < 2) {
        throw Error(ErrorCode::NotIncreasing, "need at least one cut beyond k_0", 1);
    }
    for (std::size_t r = 1; r < cuts.size(); ++r) {
        if (cuts[r] <= cuts[r - 1]) {
            throw Error(ErrorCode::NotIncreasing,
                        "cut k_" + std::to_string(r) + " does not increase", r);
        }
    }
    double min_ratio = std::numeric_limits<double>::infinity();
    for (std::size_t r = 2; r < cuts.size(); ++r) {
        min_ratio = std::min(min_ratio, static_cast<double>(cuts[r]) /
                                            static_cast<double>(cuts[r - 1]));
    }
    // "lim inf q_r > 1" read at desk scale: min observed ratio clears the margin
    const bool regular = cuts.size() > 2 && min_ratio > 1.0 + regularity_margin;
    return LacunarySchedule(std::move(cuts), regularity_margin, regular);
}

LacunarySchedule LacunarySchedule::doubling(std::size_t window_count) {
    std::vector<std::size_t> cuts{0};
    std::size_t k = 2;
    for (std::size_t r = 0; r < window_count; ++r, k *= 2) cuts.push_back(k);
    return validate(std::move(cuts));
}

IndexWindow LacunarySchedule::window(std::size_t r) const {
    if (r < 1 || r > window_count()) {
        throw Error(ErrorCode::OutOfRange, "lacunary window " + std::to_string(r) + " out of range",
                    r);
    }
    return IndexWindow{cuts_[r - 1] + 1, cuts_[r]};
}

std::size_t LacunarySchedule::length(std::size_t r) const {
    const IndexWindow w = window(r);
    return w.hi - w.lo + 1;
}

double LacunarySchedule::ratio(std::size_t r) const {
    if (r < 2 || r > window_count()) {
        throw Error(ErrorCode::OutOfRange, "ratio q_" + std::to_string(r) + " undefined", r);
    }
    return static_cast<double>(cuts_[r]) / static_cast<double>(cuts_[r - 1]);
}

} // namespace lamstat
