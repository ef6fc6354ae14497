#pragma once

namespace synram {
inline constexpr const char* kVersion = "0.1.0";
}
