#pragma once

namespace hkt {
inline constexpr const char* kVersion = "0.1.0";
}
