#pragma once

#include <stdexcept>
#include <string>

namespace gcoh {

/// A constructor or operation received data violating its documented
/// preconditions (bad Cayley table, non-equivariant map, B not inside Z, ...).
/// The message names the violated axiom and, where applicable, a witness.
class ValidationError : public std::runtime_error {
public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// A computation was refused because it would exceed the configured
/// coordinate-entry bound. The message names the offending dimension.
class ResourceBoundError : public std::runtime_error {
public:
  explicit ResourceBoundError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace gcoh
