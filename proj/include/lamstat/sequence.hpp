#pragma once

#include <cstddef>
#include <vector>

#include "lamstat/error.hpp"

namespace lamstat {

/// A finite, 1-indexed prefix x_1..x_N of a real sequence. Values are
/// checked finite at construction; immutable afterwards.
class SequencePrefix {
public:
    static SequencePrefix from(std::vector<double> values);

    std::size_t size() const noexcept { return values_.size(); }

    // 1-based access; k in [1, size()]
    double value(std::size_t k) const { return values_[k - 1]; }

    const std::vector<double>& values() const noexcept { return values_; }

private:
    explicit SequencePrefix(std::vector<double> values) : values_(std::move(values)) {}
    std::vector<double> values_;
};

} // namespace lamstat
