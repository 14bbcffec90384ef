#pragma once

#include <stdexcept>
#include <string>

namespace mzv {

/// Base class for all domain errors raised by the workbench.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotIndexShaped : Error {
    using Error::Error;
};
struct NotAdmissible : Error {
    using Error::Error;
};
struct EmptyIndex : Error {
    using Error::Error;
};
struct RingMismatch : Error {
    using Error::Error;
};
struct ShapeError : Error {
    using Error::Error;
};
struct DivergentAtZero : Error {
    using Error::Error;
};
struct PrecisionUnavailable : Error {
    using Error::Error;
};
struct GammaConstantResidue : Error {
    using Error::Error;
};
struct VariableMismatch : Error {
    using Error::Error;
};
struct CacheCorrupt : Error {
    using Error::Error;
};
struct UnknownCheck : Error {
    using Error::Error;
};
struct ParameterError : Error {
    using Error::Error;
};

/// Parse failure in the expression DSL; carries a 1-based position.
struct SyntaxError : Error {
    int line;
    int column;
    SyntaxError(const std::string& what, int line_, int column_)
        : Error(what + " (line " + std::to_string(line_) + ", column " + std::to_string(column_) + ")"),
          line(line_),
          column(column_) {}
};

/// Ill-typed composition in the expression DSL (e.g. dual of a word).
struct TypeError : Error {
    using Error::Error;
};

}  // namespace mzv
