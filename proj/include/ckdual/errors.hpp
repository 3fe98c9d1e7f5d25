#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ckdual {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
public:
    using Error::Error;
};

/// A candidate homomorphism matrix does not map the source relation lattice
/// into the target relation lattice. Carries the offending column.
class NotWellDefinedError : public Error {
public:
    NotWellDefinedError(const std::string& what, std::size_t column)
        : Error(what), column_(column) {}
    std::size_t column() const { return column_; }

private:
    std::size_t column_;
};

class PreconditionError : public Error {
public:
    PreconditionError(const std::string& what, std::size_t column)
        : Error(what), column_(column) {}
    std::size_t column() const { return column_; }

private:
    std::size_t column_;
};

class GroupMismatchError : public Error {
public:
    using Error::Error;
};

/// A verified identity of the construction failed. This is the erratum
/// tripwire: it fires if an input matrix ever contradicts the adopted
/// conventions instead of being silently accepted.
class InternalConsistencyError : public Error {
public:
    using Error::Error;
};

}  // namespace ckdual
