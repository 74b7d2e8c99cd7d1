#pragma once

namespace lamstat {

inline constexpr const char* kToolName = "lamstat";
inline constexpr const char* kVersion = "0.1.0";

} // namespace lamstat
