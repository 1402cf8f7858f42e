#ifndef CPMU_ERROR_HPP
#define CPMU_ERROR_HPP

#include <stdexcept>
#include <string>

namespace cpmu {

/// Malformed permutation text, duplicate entries, out-of-range lengths.
class InvalidInput : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// The pattern does not occur in the text where containment is required.
class NotContained : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// The brute-force oracle refuses inputs above its configured size bound.
class OracleTooLarge : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Raised in verification mode when a descending carrier scan accepts two
/// distinct lengths. Indicates a bug, never a user error.
class CarrierNotUnique : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

} // namespace cpmu

#endif // CPMU_ERROR_HPP
