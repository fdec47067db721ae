#pragma once

#include <stdexcept>
#include <string>

namespace wsat {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Arguments violate an operation's contract (bad n/r, k/t out of range, ...).
class InvalidParametersError : public Error {
public:
    using Error::Error;
};

// A stated precondition does not hold (empty edge set, seed not saturated, ...).
class PreconditionError : public Error {
public:
    using Error::Error;
};

// Instance exceeds the size guard of an exact method.
class SizeGuardError : public Error {
public:
    using Error::Error;
};

// A seed hypergraph handed to the construction is not weakly saturated.
class InvalidSeedError : public Error {
public:
    using Error::Error;
};

// Malformed text input; carries the 1-based line number.
class ParseError : public Error {
public:
    ParseError(int line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const noexcept { return line_; }

private:
    int line_;
};

}  // namespace wsat
