#include "lamstat/sequence.hpp"

#include <cmath>

namespace lamstat {

SequencePrefix SequencePrefix::from(std::vector<double> values) {
    if (values.empty()) {
        throw Error(ErrorCode::EmptySequence, "sequence prefix must have at least one term");
    }
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!std::isfinite(values[i])) {
            throw Error(ErrorCode::NonFiniteValue,
                        "non-finite value at index " + std::to_string(i + 1), i + 1);
        }
    }
    return SequencePrefix(std::move(values));
}

} // namespace lamstat
