#pragma once

namespace qra {

inline constexpr const char* kVersion = "1.0.0";

} // namespace qra
