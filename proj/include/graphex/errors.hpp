#pragma once

#include <stdexcept>
#include <string>

namespace graphex {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed document text (syntax level).
struct ParseError : Error {
    ParseError(std::size_t line, const std::string& msg)
        : Error("line " + std::to_string(line) + ": " + msg), line(line) {}
    explicit ParseError(const std::string& msg) : Error(msg), line(0) {}
    std::size_t line;
};

// A graph violates the invariants of its declared kind.
struct InvalidGraph : Error {
    using Error::Error;
};

// A graph is outside the source domain of an embedding.
struct InvalidSource : Error {
    using Error::Error;
};

// An inverse was applied to a graph outside the forward image.
struct NotInImage : Error {
    using Error::Error;
};

// The catalog has no chain between the requested kinds.
struct NoPath : Error {
    using Error::Error;
};

// A composed chain was applied to a graph of the wrong kind.
struct KindMismatch : Error {
    using Error::Error;
};

// An enumeration request exceeds the configured size cap.
struct UniverseTooLarge : Error {
    using Error::Error;
};

}  // namespace graphex
