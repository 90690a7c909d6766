#pragma once

#include <stdexcept>
#include <string>

namespace lsg {

// Base class for all errors thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Arguments or inputs outside an operation's domain.
class DomainError : public Error {
public:
    using Error::Error;
};

// Input text rejected; the message names the offending line.
class ParseError : public Error {
public:
    using Error::Error;
};

// An exhaustive-only operation was asked to exceed its configured cap.
// There is no heuristic fallback for these, so the refusal is explicit.
class ExhaustiveOnlyError : public Error {
public:
    using Error::Error;
};

// A requested bound or budget does not fit in 64 bits.
class OverflowError : public Error {
public:
    using Error::Error;
};

// A generator could not satisfy the requested parameters.
class GenerationError : public Error {
public:
    using Error::Error;
};

// An internal invariant failed. Indicates a bug, not bad input.
class InternalError : public Error {
public:
    using Error::Error;
};

} // namespace lsg
