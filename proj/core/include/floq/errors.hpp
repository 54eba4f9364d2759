#ifndef FLOQ_ERRORS_HPP
#define FLOQ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace floq {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Requested state carries more weight beyond the truncation level than allowed.
struct TruncationError : Error {
    using Error::Error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

struct ModeIndexOutOfRange : Error {
    using Error::Error;
};

struct StepCountTooSmall : Error {
    using Error::Error;
};

// Richardson step-doubling deviation above the accuracy gate.
struct NonConvergence : Error {
    using Error::Error;
};

struct EigensolveFailure : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

struct ValidationError : Error {
    ValidationError(const std::string& field, const std::string& what)
        : Error(field + ": " + what), field(field) {}
    std::string field;
};

}  // namespace floq

#endif
