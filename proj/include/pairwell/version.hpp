#pragma once

namespace pairwell {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace pairwell
