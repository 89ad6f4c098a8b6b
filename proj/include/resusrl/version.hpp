#pragma once

namespace resusrl {

inline constexpr const char* kToolName = "resusrl";
inline constexpr const char* kToolVersion = "0.1.0";

} // namespace resusrl
