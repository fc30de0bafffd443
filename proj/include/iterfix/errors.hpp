#ifndef ITERFIX_ERRORS_HPP
#define ITERFIX_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace iterfix {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A composition or iteration would exceed the configured degree cap.
class DegreeOverflow : public Error {
public:
    using Error::Error;
};

/// An operation that needs degree >= 2 was given a lower-degree polynomial.
class DegreeTooLow : public Error {
public:
    using Error::Error;
};

/// The simultaneous root iteration failed to meet its residual target,
/// even after a perturbed restart.  Callers should reject the instance.
class NoConvergence : public Error {
public:
    using Error::Error;
};

/// Newton refinement hit an iterate where the derivative underflows.
class DerivativeVanishes : public Error {
public:
    using Error::Error;
};

/// Preimage derivative sums taken at different base points disagree.
/// This flags a root-finding failure, never a mathematical violation.
class CInconsistent : public Error {
public:
    using Error::Error;
};

/// A parameter vector has the wrong length for the requested encoding.
class BadLength : public Error {
public:
    using Error::Error;
};

/// Text input (complex number or coefficient list) could not be parsed.
class ParseError : public Error {
public:
    using Error::Error;
};

} // namespace iterfix

#endif
