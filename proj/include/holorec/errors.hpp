#ifndef HOLOREC_ERRORS_HPP
#define HOLOREC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace holorec {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Lexical or grammatical failure; offset is the byte position in the input.
struct ParseError : Error {
    ParseError(const std::string& msg, std::size_t off)
        : Error(msg + " (at byte " + std::to_string(off) + ")"), offset(off) {}
    std::size_t offset;
};

// Expression is syntactically fine but matches none of the supported
// generating-function shapes, or violates a shape precondition.
struct UnsupportedShape : Error {
    using Error::Error;
};

// Failure while building an ODE or a recurrence from a classified shape.
struct DerivationError : Error {
    using Error::Error;
};

// Failure while producing terms from a finished recurrence.
struct GenerationError : Error {
    using Error::Error;
};

} // namespace holorec

#endif
