#ifndef LVCOX_ERRORS_HPP
#define LVCOX_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lvcox {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class InadmissibleSpec : public Error {
public:
    using Error::Error;
};

class UnknownLabel : public Error {
public:
    using Error::Error;
};

/// An operation that requires a V1-V6 valid skeleton received an invalid one.
class InvalidSkeleton : public Error {
public:
    using Error::Error;
};

class NotFactorial : public Error {
public:
    using Error::Error;
};

class NotComplete : public Error {
public:
    using Error::Error;
};

/// A structural statement the factorialization relies on failed at runtime;
/// the input is not the skeleton of an actual spherical variety.
class AxiomViolation : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

} // namespace lvcox

#endif // LVCOX_ERRORS_HPP
