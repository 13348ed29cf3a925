#pragma once

#include <stdexcept>
#include <string>

namespace interlab {

/// Malformed input: bad schema, unknown atom, mismatched spaces.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was called outside its mathematical domain, e.g. the extended
/// Lebesgue integral of a function that is not semi-integrable.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A library invariant did not hold. Seeing one of these means a bug in the
/// library or a functional that violates its declared properties.
class InvariantFailure : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace interlab
