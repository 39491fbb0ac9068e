#pragma once

namespace mcua {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace mcua
