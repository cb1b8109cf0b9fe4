#pragma once

namespace rrps {

inline constexpr const char *kVersion = "0.1.0";

}  // namespace rrps
