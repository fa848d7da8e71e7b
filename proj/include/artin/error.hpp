#pragma once

#include <stdexcept>
#include <string>

namespace artin {

  // Raised for malformed input: bad word syntax, unknown generators, invalid
  // files, violated preconditions on user-supplied data.
  class input_error : public std::invalid_argument {
   public:
    explicit input_error(std::string const& what)
        : std::invalid_argument(what) {}
  };

  // Raised when an internal construction invariant is violated.
  class invariant_error : public std::logic_error {
   public:
    explicit invariant_error(std::string const& what)
        : std::logic_error(what) {}
  };

}  // namespace artin
