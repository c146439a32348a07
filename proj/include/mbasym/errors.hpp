#pragma once

#include <stdexcept>
#include <string>

namespace mbasym {

// Root of the library's error taxonomy.  Everything the library throws on a
// contract violation derives from Error, so callers can catch one type.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Argument lies outside a function's domain (wrong sign, empty strip, ...).
class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error(what) {}
};

// Evaluation requested exactly at (or within the exclusion radius of) a pole.
class PoleError : public Error {
public:
    explicit PoleError(const std::string& what) : Error(what) {}
};

// Mellin-kernel evaluation outside its strip of analyticity.
class StripError : public Error {
public:
    explicit StripError(const std::string& what) : Error(what) {}
};

// Parameters fall in a regime a given expansion does not cover
// (e.g. a double pole or exponentially small case routed to the wrong series).
class RegimeError : public Error {
public:
    explicit RegimeError(const std::string& what) : Error(what) {}
};

// An iteration failed to meet its tolerance within the permitted work budget.
class ConvergenceError : public Error {
public:
    explicit ConvergenceError(const std::string& what) : Error(what) {}
};

// The requested accuracy cannot be certified with the available working
// precision (e.g. catastrophic cancellation exceeding the guard digits).
class PrecisionError : public Error {
public:
    explicit PrecisionError(const std::string& what) : Error(what) {}
};

// The Y-series combination is singular at integer Bessel order.
class IntegerNuError : public Error {
public:
    explicit IntegerNuError(const std::string& what) : Error(what) {}
};

// Functionality deliberately out of scope (documented stub).
class UnimplementedError : public Error {
public:
    explicit UnimplementedError(const std::string& what) : Error(what) {}
};

} // namespace mbasym
