#pragma once

#include <stdexcept>
#include <string>

namespace pairs {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A caller handed in something outside an operation's domain.
class InputError : public Error {
public:
    using Error::Error;
};

/// An exact identity that is a theorem failed to hold. Always a bug.
class InternalAssertion : public Error {
public:
    using Error::Error;
};

// exact-series
class DivisionByZero : public InputError {
public:
    using InputError::InputError;
};
class NonInvertible : public InputError {
public:
    using InputError::InputError;
};
/// Read past the truncation order of a series.
class OutOfWindow : public InternalAssertion {
public:
    using InternalAssertion::InternalAssertion;
};
class NotDivisible : public InternalAssertion {
public:
    using InternalAssertion::InternalAssertion;
};
class NonInteger : public InternalAssertion {
public:
    using InternalAssertion::InternalAssertion;
};
/// Two computation routes disagreed.
class RouteMismatch : public InternalAssertion {
public:
    using InternalAssertion::InternalAssertion;
};

// chambers / poincare / verlinde
class InvalidChamber : public InputError {
public:
    using InputError::InputError;
};
class OnWall : public InputError {
public:
    using InputError::InputError;
};
class OutOfRange : public InputError {
public:
    using InputError::InputError;
};
class UnsupportedChamber : public InputError {
public:
    using InputError::InputError;
};
class RegionViolation : public InputError {
public:
    using InputError::InputError;
};
class DegenerateParameters : public InputError {
public:
    using InputError::InputError;
};
class PrecisionInsufficient : public InternalAssertion {
public:
    using InternalAssertion::InternalAssertion;
};

}  // namespace pairs
