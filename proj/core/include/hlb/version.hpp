#pragma once

namespace hlb {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace hlb
