#ifndef TAPES_ERRORS_HPP
#define TAPES_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tapes {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UnknownSymbol : Error {
    using Error::Error;
};
struct CompositionMismatch : Error {
    using Error::Error;
};
struct TraceShapeMismatch : Error {
    using Error::Error;
};
struct TypeMismatch : Error {
    using Error::Error;
};
struct CarrierMismatch : Error {
    using Error::Error;
};
struct NotEndo : Error {
    using Error::Error;
};
struct ShapeMismatch : Error {
    using Error::Error;
};
struct NotSquare : Error {
    using Error::Error;
};
struct NotCoreflexive : Error {
    using Error::Error;
};
struct SchemaMismatch : Error {
    using Error::Error;
};
struct NotAModel : Error {
    using Error::Error;
};
struct UnboundVariable : Error {
    using Error::Error;
};
struct ArityMismatch : Error {
    using Error::Error;
};
struct SortMismatch : Error {
    using Error::Error;
};

// Parse failure with a byte offset into the source text.
struct SyntaxError : Error {
    SyntaxError(const std::string& msg, std::size_t pos)
        : Error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
    std::size_t position;
};

}  // namespace tapes

#endif
