#pragma once

#include <stdexcept>
#include <string>

namespace hgeo {

struct NonPositiveCoordinateError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DimensionTooSmallError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DimensionMismatchError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ZeroSumViolationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct PointOutsidePolytopeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NotSymmetricError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct FactorizationFailureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DegenerateLineError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NotEnoughDistinctPointsError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct EmptyInputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ToleranceNotReachedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct LengthMismatchError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct UnknownSuiteError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct UnknownMetricError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DegenerateDrawError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace hgeo
