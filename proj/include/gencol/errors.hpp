#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gencol {

// Bad arguments: unknown graph name, vertex out of range, malformed file, ...
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

// A bounded search ran out of its node/size budget. Carries the best bounds
// established before the search was abandoned.
class ResourceError : public std::runtime_error {
 public:
  ResourceError(const std::string& what, long long lower, long long upper)
      : std::runtime_error(what), lower_bound(lower), upper_bound(upper) {}

  long long lower_bound;
  long long upper_bound;
};

// A guarantee the library promises to uphold failed; always a bug.
class InvariantError : public std::logic_error {
 public:
  explicit InvariantError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace gencol
