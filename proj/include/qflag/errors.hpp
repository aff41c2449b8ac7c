#ifndef QFLAG_ERRORS_HPP
#define QFLAG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qflag {

// Base class for all qflag errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Exact polynomial division left a nonzero remainder.
class NotDivisible : public Error {
public:
    using Error::Error;
};

// Integer evaluation was asked for with an incomplete assignment.
class MissingVariable : public Error {
public:
    using Error::Error;
};

// Elementary symmetric index exceeds the number of values.
class IndexOutOfRange : public Error {
public:
    using Error::Error;
};

// Series operands disagree on truncation caps.
class CapMismatch : public Error {
public:
    using Error::Error;
};

// Series inversion was asked for on a non-unit.
class NotAUnit : public Error {
public:
    using Error::Error;
};

// Generic precondition violation on operation arguments.
class InvalidArguments : public Error {
public:
    using Error::Error;
};

// Field construction with a composite characteristic.
class NotPrime : public Error {
public:
    using Error::Error;
};

// Type classification of the zero subspace.
class ZeroDimensional : public Error {
public:
    using Error::Error;
};

// Malformed polynomial text.
class ParseError : public Error {
public:
    using Error::Error;
};

} // namespace qflag

#endif
