#ifndef QUATFORGET_ERRORS_HPP
#define QUATFORGET_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qf {

/// Input outside an operation's domain (zero where nonzero is required,
/// split algebra where a division algebra is required, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// An internal consistency check failed: two independent computations of
/// the same quantity disagree.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Maximal-order construction could not enlarge a non-maximal order.
class SaturationFailed : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A floating point test landed inside its tolerance band.
class Indeterminate : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed serialized input.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Arithmetic left the fixed-width range used by the search kernels.
class OverflowError : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

} // namespace qf

#endif
