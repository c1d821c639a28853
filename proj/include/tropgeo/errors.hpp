#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tropgeo {

// Base class for all domain errors raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Input text does not conform to the polynomial / literal grammar.
class SyntaxError : public Error {
public:
    SyntaxError(std::size_t offset, std::string expected, const std::string& detail)
        : Error("syntax error at offset " + std::to_string(offset) + ": " + detail +
                (expected.empty() ? "" : " (expected " + expected + ")")),
          offset(offset),
          expected(std::move(expected)) {}

    std::size_t offset;
    std::string expected;
};

class UnknownVariable : public Error {
public:
    UnknownVariable(std::size_t offset, const std::string& name)
        : Error("unknown variable '" + name + "' at offset " + std::to_string(offset)),
          offset(offset),
          name(name) {}

    std::size_t offset;
    std::string name;
};

// A 't' literal appeared while the coefficient field is not a Puiseux field.
class PuiseuxLiteralOutsideSpec : public Error {
public:
    explicit PuiseuxLiteralOutsideSpec(std::size_t offset)
        : Error("Puiseux literal at offset " + std::to_string(offset) +
                " is only valid with a Puiseux coefficient field"),
          offset(offset) {}

    std::size_t offset;
};

// A truncated series does not carry enough known terms to answer the query.
class PrecisionExhausted : public Error {
public:
    using Error::Error;
};

// Requested group element lies outside the value group of the field.
class NotInValueGroup : public Error {
public:
    using Error::Error;
};

class NegativeValuation : public Error {
public:
    using Error::Error;
};

class ZeroPolynomial : public Error {
public:
    using Error::Error;
};

class ZeroCoordinate : public Error {
public:
    using Error::Error;
};

class ZeroDivide : public Error {
public:
    using Error::Error;
};

class NoRoots : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class NotInTropicalVariety : public Error {
public:
    using Error::Error;
};

}  // namespace tropgeo
