#include "lamstat/error.hpp"

namespace lamstat {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::FirstNotOne: return "FirstNotOne";
        case ErrorCode::Decreasing: return "Decreasing";
        case ErrorCode::JumpTooBig: return "JumpTooBig";
        case ErrorCode::NonPositive: return "NonPositive";
        case ErrorCode::FirstNotZero: return "FirstNotZero";
        case ErrorCode::NotIncreasing: return "NotIncreasing";
        case ErrorCode::OutOfRange: return "OutOfRange";
        case ErrorCode::NonPositiveEpsilon: return "NonPositiveEpsilon";
        case ErrorCode::CutsExceedPrefix: return "CutsExceedPrefix";
        case ErrorCode::PrefixTooShort: return "PrefixTooShort";
        case ErrorCode::NonBitValue: return "NonBitValue";
        case ErrorCode::CapExceeded: return "CapExceeded";
        case ErrorCode::DomainTooSmall: return "DomainTooSmall";
        case ErrorCode::DomainViolation: return "DomainViolation";
        case ErrorCode::Malformed: return "Malformed";
        case ErrorCode::NonContiguousIndex: return "NonContiguousIndex";
        case ErrorCode::EmptyFile: return "EmptyFile";
        case ErrorCode::EmptySequence: return "EmptySequence";
        case ErrorCode::NonFiniteValue: return "NonFiniteValue";
        case ErrorCode::BadConfig: return "BadConfig";
    }
    return "Unknown";
}

} // namespace lamstat
