#pragma once

namespace kleitman {
inline constexpr const char* kVersion = "0.1.0";
}
