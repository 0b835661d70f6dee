#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace garlink {

// Bad user input: parse failures, malformed presentations, out-of-range flags.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// A reversing computation exhausted its step budget.
class DivergenceError : public std::runtime_error {
 public:
  DivergenceError(const std::string& what, std::int64_t cap)
      : std::runtime_error(what), cap_(cap) {}
  std::int64_t cap() const { return cap_; }

 private:
  std::int64_t cap_;
};

// An enumeration exceeded its resource budget.
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace garlink
