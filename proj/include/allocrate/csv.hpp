// Numeric formatting shared by every CSV and text renderer.
#pragma once

#include <cstdio>
#include <string>

namespace allocrate {

/// 12 significant digits; round-trips to within 1e-11 relative error.
inline std::string format_value(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.12g", value);
  return buffer;
}

}  // namespace allocrate
