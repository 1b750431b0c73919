#pragma once

namespace witnesskit {
inline constexpr const char* kVersion = "0.1.0";
}
