#pragma once

#include <stdexcept>
#include <string>

namespace designforge {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// File parsing failed; `line` is the 1-based line the message refers to.
struct ParseError : Error {
    int line;
    ParseError(int line_, const std::string& what_)
        : Error(what_ + " at line " + std::to_string(line_)), line(line_) {}
};

// A WeightedPointSet violates one of its structural invariants.
struct InvariantViolation : Error {
    using Error::Error;
};

struct ExactUnsupported : Error {
    using Error::Error;
};

struct HankelNotPD : Error {
    using Error::Error;
};

struct FieldUnsupported : Error {
    using Error::Error;
};

struct GiveUp : Error {
    using Error::Error;
};

struct OddT : Error {
    using Error::Error;
};

struct NotADesign : Error {
    using Error::Error;
};

struct OriginPoint : Error {
    using Error::Error;
};

struct BadDimension : Error {
    using Error::Error;
};

struct FitFailed : Error {
    using Error::Error;
};

struct NoSolution : Error {
    using Error::Error;
};

struct TooManyParts : Error {
    using Error::Error;
};

struct SingularAfterRetries : Error {
    using Error::Error;
};

struct DimensionTooSmall : Error {
    using Error::Error;
};

struct ConditionViolated : Error {
    using Error::Error;
};

struct RetriesExhausted : Error {
    using Error::Error;
};

struct TooLarge : Error {
    using Error::Error;
};

}  // namespace designforge
