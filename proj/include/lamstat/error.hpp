#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lamstat {

enum class ErrorCode {
    // lambda schedule validation
    FirstNotOne,
    Decreasing,
    JumpTooBig,
    NonPositive,
    // lacunary schedule validation
    FirstNotZero,
    NotIncreasing,
    // windowed operations
    OutOfRange,
    NonPositiveEpsilon,
    CutsExceedPrefix,
    PrefixTooShort,
    // generators
    NonBitValue,
    CapExceeded,
    // probe
    DomainTooSmall,
    DomainViolation,
    // file ingestion
    Malformed,
    NonContiguousIndex,
    EmptyFile,
    // construction / configuration
    EmptySequence,
    NonFiniteValue,
    BadConfig,
};

const char* error_code_name(ErrorCode code);

// All library failures surface as Error; `index` carries the offending
// 1-based position when one exists (0 otherwise).
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, std::string message, std::size_t index = 0)
        : std::runtime_error(std::move(message)), code_(code), index_(index) {}

    ErrorCode code() const noexcept { return code_; }
    std::size_t index() const noexcept { return index_; }

private:
    ErrorCode code_;
    std::size_t index_;
};

} // namespace lamstat
