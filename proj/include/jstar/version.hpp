#pragma once

namespace jstar {

inline constexpr const char* kVersion = "0.1.0";

} // namespace jstar
