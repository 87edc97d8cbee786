#ifndef GKFOL_ERRORS_HPP
#define GKFOL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gkfol {

struct GkError : std::runtime_error {
    explicit GkError(const std::string& what) : std::runtime_error(what) {}
};

struct TooFewWeights : GkError {
    TooFewWeights() : GkError("weight vector needs at least 3 entries") {}
};

struct DuplicateWeights : GkError {
    DuplicateWeights() : GkError("weight entries must be pairwise distinct") {}
};

struct InvalidInput : GkError {
    explicit InvalidInput(const std::string& what) : GkError(what) {}
};

struct DimensionMismatch : GkError {
    DimensionMismatch() : GkError("operands live in different variable counts") {}
};

struct ZeroField : GkError {
    ZeroField() : GkError("operation undefined for the zero field") {}
};

struct GradeOverflow : GkError {
    GradeOverflow() : GkError("exterior derivative would exceed top grade") {}
};

struct GradeMismatch : GkError {
    GradeMismatch() : GkError("form grade does not match the operation") {}
};

struct ChartOutOfRange : GkError {
    ChartOutOfRange() : GkError("chart index must lie in [1, n]") {}
};

struct NonQuasiHomogeneousInput : GkError {
    NonQuasiHomogeneousInput() : GkError("field is not quasi-homogeneous of the expected weight") {}
};

struct EmptyFamily : GkError {
    EmptyFamily() : GkError("family has an empty rotational space") {}
};

struct EmptyBasis : GkError {
    EmptyBasis() : GkError("basis is empty") {}
};

struct UnsupportedN : GkError {
    UnsupportedN() : GkError("closed-form enumeration exists only for n = 3 and n = 4") {}
};

} // namespace gkfol

#endif
