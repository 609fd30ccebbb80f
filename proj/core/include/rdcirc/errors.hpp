#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rdcirc {

/// Base class for every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A Seq composes f ; g with arity(f).outputs != arity(g).inputs.
struct TypeMismatch : Error {
    using Error::Error;
};

/// Circuit text that does not conform to the grammar.
struct SyntaxError : Error {
    SyntaxError(const std::string& what, std::size_t position)
        : Error(what + " at offset " + std::to_string(position)), position(position) {}
    std::size_t position;
};

struct WidthMismatch : Error {
    using Error::Error;
};

struct ArityMismatch : Error {
    using Error::Error;
};

struct IndexOutOfRange : Error {
    using Error::Error;
};

struct LimitExceeded : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

/// Malformed row in a CSV file; message carries the 1-based row number.
struct ParseError : Error {
    using Error::Error;
};

struct SchemaError : Error {
    using Error::Error;
};

struct UnknownLabel : Error {
    using Error::Error;
};

struct EmptyDataset : Error {
    using Error::Error;
};

struct MagicMismatch : Error {
    using Error::Error;
};

struct CountMismatch : Error {
    using Error::Error;
};

struct RangeError : Error {
    using Error::Error;
};

}  // namespace rdcirc
