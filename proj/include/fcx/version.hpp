#pragma once

namespace fcx {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace fcx
