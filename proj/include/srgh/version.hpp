#pragma once

namespace srgh {

inline constexpr const char* kToolName = "srg-hadamard";
inline constexpr const char* kToolVersion = "1.0.0";

}  // namespace srgh
