#pragma once

#include <stdexcept>
#include <string>

namespace prodsched {

// Base class for all domain errors raised by the library.
class SchemeError : public std::runtime_error {
public:
    explicit SchemeError(const std::string& what) : std::runtime_error(what) {}
};

class DivisionByZeroError : public SchemeError {
public:
    DivisionByZeroError() : SchemeError("division by zero") {}
};

class ParseError : public SchemeError {
public:
    explicit ParseError(const std::string& what) : SchemeError("parse error: " + what) {}
};

// Raised when a scheme's segment boundaries do not all fall on the a.u. grid.
class NotGridAlignedError : public SchemeError {
public:
    explicit NotGridAlignedError(const std::string& what)
        : SchemeError("not grid-aligned: " + what) {}
};

// Raised for Euclidean constructions on a pair with gcd > 1; callers opt into
// granularity changes via gcd_reduce.
class NotCoprimeError : public SchemeError {
public:
    NotCoprimeError(long long r1, long long r2)
        : SchemeError("gcd(" + std::to_string(r1) + "," + std::to_string(r2) +
                      ") > 1: reduce first (see gcd_reduce)") {}
};

class IncompatiblePartsError : public SchemeError {
public:
    explicit IncompatiblePartsError(const std::string& what)
        : SchemeError("incompatible parts: " + what) {}
};

class CapacityError : public SchemeError {
public:
    explicit CapacityError(const std::string& what) : SchemeError("capacity: " + what) {}
};

class UnsupportedError : public SchemeError {
public:
    explicit UnsupportedError(const std::string& what) : SchemeError("unsupported: " + what) {}
};

// Malformed inputs to operations: bad indices, inconsistent segments, invalid specs.
class ValidationError : public SchemeError {
public:
    explicit ValidationError(const std::string& what) : SchemeError(what) {}
};

} // namespace prodsched
