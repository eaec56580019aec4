#pragma once

#include <stdexcept>
#include <string>

namespace schubert {

/// Raised when an operation is called outside its domain (bad input, unmet
/// order or dominance hypotheses, malformed text).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a property the combinatorics guarantees fails to hold. Seeing
/// one of these means a bug, never bad input.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

#if defined(SCHUBERT_CROSS_CHECKS) && SCHUBERT_CROSS_CHECKS
inline constexpr bool kCrossChecks = true;
#else
inline constexpr bool kCrossChecks = false;
#endif

namespace detail {

inline void require(bool condition, const std::string& message) {
  if (!condition) throw PreconditionError(message);
}

inline void ensure(bool condition, const std::string& message) {
  if (!condition) throw InvariantViolation(message);
}

}  // namespace detail
}  // namespace schubert
