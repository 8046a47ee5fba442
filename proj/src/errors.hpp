#pragma once

#include <stdexcept>
#include <string>

namespace hg {

// Input text that does not conform to one of the documented file formats.
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// An enumeration or size cap was exceeded.  Raised instead of ever returning
// a truncated or approximate answer.
struct ResourceLimitError : std::runtime_error {
  explicit ResourceLimitError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace hg
