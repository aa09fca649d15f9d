#pragma once

#include <stdexcept>
#include <string>

namespace weilchar {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidModulus : public Error {
public:
    using Error::Error;
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero in F_p") {}
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class ZeroFormClass : public Error {
public:
    ZeroFormClass() : Error("the zero element has no square class") {}
};

class EnumerationTooLarge : public Error {
public:
    using Error::Error;
};

class ArityError : public Error {
public:
    using Error::Error;
};

class SingularGMinusOne : public Error {
public:
    SingularGMinusOne() : Error("g - 1 is not invertible") {}
};

class NotSymplectic : public Error {
public:
    NotSymplectic() : Error("not in Sp") {}
};

class NotLagrangian : public Error {
public:
    using Error::Error;
};

class InvalidLift : public Error {
public:
    using Error::Error;
};

} // namespace weilchar
