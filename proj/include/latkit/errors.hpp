// Error types shared across the library.
#pragma once

#include <stdexcept>
#include <string>

namespace latkit {

// Base class for all latkit errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Input data (file, labels, flags) is malformed.
struct InputError : Error {
    using Error::Error;
};

// The reflexive-transitive closure of the declared covers is not antisymmetric.
struct CycleError : InputError {
    using InputError::InputError;
};

// A declared cover edge is already implied transitively (or is degenerate).
struct NonCoverEdgeError : InputError {
    using InputError::InputError;
};

// Some pair of elements lacks a least upper bound or a greatest lower bound.
struct NotALatticeError : InputError {
    std::string x, y;
    NotALatticeError(const std::string& xl, const std::string& yl, const std::string& what)
        : InputError("not a lattice: elements '" + xl + "', '" + yl + "' have no " + what),
          x(xl), y(yl) {}
};

struct NotJoinIrreducibleError : Error {
    explicit NotJoinIrreducibleError(const std::string& label)
        : Error("element '" + label + "' is not join-irreducible") {}
};

struct NotACoverError : Error {
    explicit NotACoverError(const std::string& msg) : Error(msg) {}
};

// An exhaustive scan would exceed the configured budget or size bound.
struct SizeGuardError : Error {
    using Error::Error;
};

struct ParseError : InputError {
    std::size_t token_index;  // 1-based index of the offending token
    ParseError(const std::string& msg, std::size_t tok)
        : InputError(msg + " at token " + std::to_string(tok)), token_index(tok) {}
};

struct UnboundVariableError : Error {
    std::string name;
    explicit UnboundVariableError(const std::string& var)
        : Error("unbound variable '" + var + "'"), name(var) {}
};

struct UnknownPredicateError : InputError {
    explicit UnknownPredicateError(const std::string& name)
        : InputError("unknown predicate '" + name + "'") {}
};

struct NotBooleanError : InputError {
    using InputError::InputError;
};

struct NoComplementaryPairError : InputError {
    using InputError::InputError;
};

}  // namespace latkit
