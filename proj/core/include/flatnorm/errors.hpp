#pragma once

#include <stdexcept>
#include <string>

namespace flatnorm {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DegenerateSimplex : Error { using Error::Error; };
struct IndexOutOfRange : Error { using Error::Error; };
struct DimensionOutOfRange : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };
struct NegativeWeight : Error { using Error::Error; };
struct MissingCoordinates : Error { using Error::Error; };
struct NotOptimal : Error { using Error::Error; };
struct NodeBudgetExceeded : Error { using Error::Error; };
struct WrongDimension : Error { using Error::Error; };
struct SizeCapExceeded : Error { using Error::Error; };
struct InvalidDimension : Error { using Error::Error; };
struct CurveOutsideComplex : Error { using Error::Error; };
struct CenterSamplingFailed : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };
struct InconsistentIndexing : Error { using Error::Error; };
struct NonTriangularFace : Error { using Error::Error; };
struct UnknownSimplex : Error { using Error::Error; };
struct NonIntegerCoefficient : Error { using Error::Error; };

} // namespace flatnorm
