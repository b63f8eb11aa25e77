#pragma once

#include <stdexcept>
#include <string>

namespace wecp {

// Algebraic identities (norms, probabilities, amplitude comparisons).
inline constexpr double kAlgebraTol = 1e-12;
// Eigenvalue positivity clamp for rank-deficient reductions.
inline constexpr double kEigenvalueTol = 1e-10;
// Coefficient-pattern classification (|b| == |c| tests).
inline constexpr double kPatternTol = 1e-9;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A state that cannot be normalized (all amplitudes zero).
struct InvalidStateError : Error {
    using Error::Error;
};

// Unknown qubit label, or a label collision in a tensor product.
struct LabelError : Error {
    using Error::Error;
};

struct NonUnitaryError : Error {
    using Error::Error;
};

struct DimensionError : Error {
    using Error::Error;
};

// A coefficient configuration for which a measurement basis is undefined.
struct DegenerateCoefficientsError : Error {
    using Error::Error;
};

// Input coefficients do not match the pattern a round requires.
struct PatternMismatchError : Error {
    using Error::Error;
};

}  // namespace wecp
