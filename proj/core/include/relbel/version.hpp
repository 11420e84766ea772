#pragma once

namespace relbel {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace relbel
