#pragma once

#include <stdexcept>
#include <string>

namespace abmod {

// Malformed user input: syntax errors, undeclared variables, non-prime
// moduli, mixed contexts. Maps to CLI exit code 2.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// A configured budget was exceeded (DNF cap, enumeration cap, Groebner
// pair cap). Never silently truncates a result. Maps to CLI exit code 3.
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

// Violated internal invariant. Always a bug.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace abmod
