#pragma once

namespace rinar {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace rinar
