#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pcat {

// Invalid arguments (s = 0, n = 0, k out of range, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Exhaustive enumeration refused because it would exceed the configured limits.
class ResourceGuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Reading or writing the on-disk cache failed.
class CacheIOError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A cache file was readable but failed validation.
class CacheIntegrityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The log-space recursion produced a nonpositive cancelation ratio.
class StabilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace pcat
