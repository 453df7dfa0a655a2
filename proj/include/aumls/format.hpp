#pragma once

#include <charconv>
#include <string>

namespace aumls {

// Shortest round-trip decimal form; keeps CSV output byte-stable.
inline std::string fmt(double x) {
  char buf[40];
  auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

}  // namespace aumls
