#pragma once

namespace allocrate {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace allocrate
