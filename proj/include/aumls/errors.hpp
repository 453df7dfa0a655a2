#pragma once

#include <stdexcept>
#include <string>

namespace aumls {

// Bad input data or configuration. The CLI maps these to exit code 2.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Broken internal invariant (event queue corruption, continuity drift).
// The CLI maps these to exit code 3. These checks are O(1) per event and
// stay enabled in release builds.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace aumls
