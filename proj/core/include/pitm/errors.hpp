#pragma once

#include <stdexcept>
#include <string>

namespace pitm {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands come from different computation contexts (surd or derivation mode).
class UsageError : public Error {
public:
    using Error::Error;
};

class DivisionByZero : public Error {
public:
    using Error::Error;
};

/// A ring element was built with a zero denominator.
class InvalidElement : public Error {
public:
    using Error::Error;
};

/// Power-series division by a series whose constant term is not invertible.
class SingularDivision : public Error {
public:
    using Error::Error;
};

/// Numeric evaluation hit a vanishing denominator or a non-finite value.
class EvaluationSingularity : public Error {
public:
    using Error::Error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

class DivergenceError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace pitm
