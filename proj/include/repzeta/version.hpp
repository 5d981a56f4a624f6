#pragma once

namespace repzeta {
inline constexpr const char* kVersion = "0.1.0";
}
