#pragma once

namespace tgembed {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace tgembed
