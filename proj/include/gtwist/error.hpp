#pragma once

#include <stdexcept>
#include <string>

namespace gtwist {

// All recoverable failures are exceptions derived from Error.  Verification
// routines never throw on a mathematically *false* input; they return a
// report or CheckResult instead.  Exceptions mean the request itself was
// malformed (shape, window, missing data).
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct OutOfWindowError : Error {
    explicit OutOfWindowError(const std::string& msg) : Error("out of window: " + msg) {}
};

struct DimensionMismatchError : Error {
    explicit DimensionMismatchError(const std::string& msg) : Error("dimension mismatch: " + msg) {}
};

struct ShapeMismatchError : Error {
    explicit ShapeMismatchError(const std::string& msg) : Error("shape mismatch: " + msg) {}
};

struct EmptyWindowError : Error {
    explicit EmptyWindowError(const std::string& msg) : Error("empty window: " + msg) {}
};

struct NotAssociatedError : Error {
    explicit NotAssociatedError(const std::string& msg)
        : Error("not an associated G-algebra: " + msg) {}
};

struct UnverifiedPrincipalMapError : Error {
    explicit UnverifiedPrincipalMapError(const std::string& witness)
        : Error("principal map failed verification: " + witness) {}
};

struct UnverifiedTwistingSystemError : Error {
    explicit UnverifiedTwistingSystemError(const std::string& witness)
        : Error("twisting system failed verification: " + witness) {}
};

struct MissingComponentError : Error {
    explicit MissingComponentError(const std::string& msg) : Error("missing component: " + msg) {}
};

struct SingularBlockError : Error {
    explicit SingularBlockError(const std::string& msg) : Error("singular block: " + msg) {}
};

struct UncertifiedIsoError : Error {
    explicit UncertifiedIsoError(const std::string& witness)
        : Error("morphism is not a certified isomorphism: " + witness) {}
};

struct UnknownFixtureError : Error {
    explicit UnknownFixtureError(const std::string& name) : Error("unknown fixture: " + name) {}
};

struct InvalidArgumentError : Error {
    explicit InvalidArgumentError(const std::string& msg) : Error(msg) {}
};

// Parse errors carry a 1-based source location.
struct ParseError : Error {
    int line;
    int column;
    ParseError(int line_, int column_, const std::string& msg)
        : Error("parse error at " + std::to_string(line_) + ":" + std::to_string(column_) + ": " +
                msg),
          line(line_),
          column(column_) {}
};

}  // namespace gtwist
