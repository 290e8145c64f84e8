#pragma once

namespace tsecon {

inline constexpr const char* kToolVersion = "1.0.0";

}  // namespace tsecon
