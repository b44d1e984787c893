#pragma once

namespace lefgamma {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace lefgamma
