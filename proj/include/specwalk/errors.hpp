#ifndef SPECWALK_ERRORS_HPP
#define SPECWALK_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace specwalk {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed input text; `offset` is a byte offset (graph6) or line number
/// (edgelist), whichever the parser was counting.
struct ParseError : Error {
    std::size_t offset;
    ParseError(const std::string& msg, std::size_t off)
        : Error(msg + " (at offset " + std::to_string(off) + ")"), offset(off) {}
};

struct LoopError : Error {
    using Error::Error;
};

struct DuplicateEdgeError : Error {
    using Error::Error;
};

struct UnknownVertex : Error {
    explicit UnknownVertex(int v)
        : Error("unknown vertex " + std::to_string(v)) {}
};

struct SameVertex : Error {
    explicit SameVertex(int v)
        : Error("vertex pair requires two distinct vertices, got " +
                std::to_string(v) + " twice") {}
};

struct TooLarge : Error {
    using Error::Error;
};

struct InvalidLength : Error {
    using Error::Error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

struct ZeroPolynomial : Error {
    ZeroPolynomial() : Error("operation undefined for the zero polynomial") {}
};

struct ZeroDenominator : Error {
    ZeroDenominator() : Error("rational function with zero denominator") {}
};

struct ConvergenceFailure : Error {
    using Error::Error;
};

struct DisconnectedGraph : Error {
    using Error::Error;
};

struct MismatchedSupportGrids : Error {
    using Error::Error;
};

/// A runtime self-check failed; indicates a bug, mapped to exit code 3 by the CLI.
struct InvariantViolation : Error {
    using Error::Error;
};

}  // namespace specwalk

#endif
