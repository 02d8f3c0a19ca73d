#pragma once

#include <charconv>
#include <cmath>
#include <string>

namespace radialnet {

// Shortest round-trip decimal form; NaN becomes an empty field.
inline std::string FormatDouble(double x) {
  if (std::isnan(x)) return {};
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, end);
}

}  // namespace radialnet
