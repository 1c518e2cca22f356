#ifndef HALLFORGE_ERRORS_HPP
#define HALLFORGE_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hallforge {

/// Thrown when an exhaustive enumeration would exceed the configured cap.
struct resource_limit_error : std::runtime_error {
  explicit resource_limit_error(const std::string& what)
      : std::runtime_error(what) {}
};

/// Thrown when a product forces a class outside the catalog bound.
/// Identity checks must never see silently dropped terms, so sums that
/// would leave the bound fail loudly instead of truncating.
struct out_of_catalog_error : std::runtime_error {
  explicit out_of_catalog_error(const std::string& what)
      : std::runtime_error(what) {}
};

/// Malformed textual input (quiver spec, iso-class literal, element grammar).
struct parse_error : std::runtime_error {
  parse_error(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
        pos(position) {}
  std::size_t pos;
};

/// An internal consistency check failed (inexact division, negative
/// extension dimension, non-decreasing recursion measure). Signals a bug.
struct internal_error : std::logic_error {
  explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace hallforge

#endif
