#pragma once

namespace spined {

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kVersion = "0.1.0";

}  // namespace spined
