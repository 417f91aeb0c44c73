#pragma once

#include <stdexcept>
#include <string>

namespace weyl {

/// Caller supplied something malformed: an illegal type, a bad expression,
/// mismatched operands.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A mathematical invariant the library relies on did not hold. Seeing one of
/// these means a bug, never bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace weyl
