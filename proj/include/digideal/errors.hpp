#pragma once

#include <stdexcept>
#include <string>

namespace digideal {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Caller broke an API contract (mismatched variable tables, bad priority list, ...).
class UsageError : public Error {
public:
    using Error::Error;
};

/// Malformed graph or polynomial text, or a graph violating simplicity.
class ParseError : public Error {
public:
    using Error::Error;
};

/// A graph violates simplicity or labelling rules (loops, duplicate or antiparallel edges, ...).
class ValidationError : public Error {
public:
    using Error::Error;
};

/// A documented precondition does not hold for the given input.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// An algebraic object does not have the shape the construction guarantees.
class StructuralError : public Error {
public:
    using Error::Error;
};

/// Operation is not supported for this kind of input (e.g. matching on a non-bipartite graph).
class UnsupportedError : public Error {
public:
    using Error::Error;
};

/// An enumeration exceeded its configured cap.
class CapExceeded : public Error {
public:
    using Error::Error;
};

}  // namespace digideal
