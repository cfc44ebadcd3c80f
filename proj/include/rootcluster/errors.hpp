#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace rootcluster {

/// Bad input: out-of-range labels, unsupported parameters, malformed files.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A configured budget (closure size, storage, subset tests, DFS nodes) ran out.
/// `progress()` is the amount of work completed before giving up.
class ResourceError : public std::runtime_error {
 public:
  ResourceError(const std::string& what, std::uint64_t progress)
      : std::runtime_error(what), progress_(progress) {}

  std::uint64_t progress() const noexcept { return progress_; }

 private:
  std::uint64_t progress_;
};

/// Internal consistency failure; indicates a modeling bug rather than bad input.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace rootcluster
