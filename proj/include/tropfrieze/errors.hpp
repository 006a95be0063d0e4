#pragma once

#include <stdexcept>
#include <string>

namespace tropfrieze {

// Root of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed caller input: shape mismatches, out-of-range indices, bad matrices.
class InvalidInput : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

class NotDivisible : public Error {
public:
    using Error::Error;
};

class ZeroDenominator : public Error {
public:
    using Error::Error;
};

class SubtractionFreeViolation : public Error {
public:
    using Error::Error;
};

class Overflow : public Error {
public:
    using Error::Error;
};

class BudgetExceeded : public Error {
public:
    using Error::Error;
};

class NegativeExponent : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

class NotFiniteType : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

class NotAdmissible : public Error {
public:
    using Error::Error;
};

class NotFound : public Error {
public:
    using Error::Error;
};

// Two independent computations of the same quantity disagreed.
class RouteDisagreement : public Error {
public:
    using Error::Error;
};

}  // namespace tropfrieze
