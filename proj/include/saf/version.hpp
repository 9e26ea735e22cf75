#pragma once

namespace saf {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace saf
