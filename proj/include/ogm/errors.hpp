#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ogm {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input to a constructor or operation.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// A value lies outside the semiring's domain (includes NaN).
class InvalidValue : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

/// A factor's shape disagrees with the label counts of its variables.
class ShapeMismatch : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

/// Lookup of an unknown id or name.
class NotFound : public Error {
public:
    using Error::Error;
};

/// Coordinate or label index out of range.
class IndexError : public Error {
public:
    using Error::Error;
};

/// Exhaustive enumeration would exceed the configured state cap.
class TooLarge : public Error {
public:
    using Error::Error;
};

/// The requested (algorithm, semiring) pair is not supported.
class UnsupportedCombination : public Error {
public:
    using Error::Error;
};

/// The model violates a structural requirement of an algorithm.
class UnsupportedModel : public Error {
public:
    using Error::Error;
};

/// A conditional distribution has zero total mass.
class DegenerateDistribution : public Error {
public:
    using Error::Error;
};

/// A move energy violates the submodularity requirement.
class SubmodularityViolation : public Error {
public:
    explicit SubmodularityViolation(const std::string& what, std::size_t factor)
        : Error(what), factor_(factor) {}

    std::size_t factor() const noexcept { return factor_; }

private:
    std::size_t factor_;
};

/// Filesystem-level read/write failure.
class IoError : public Error {
public:
    using Error::Error;
};

/// Malformed model file; carries the 1-based line number.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// File declares a format version this build does not read.
class UnsupportedVersion : public Error {
public:
    using Error::Error;
};

} // namespace ogm
