#pragma once

#include <stdexcept>
#include <string>

namespace grmod {

struct GrmodError : std::runtime_error {
    explicit GrmodError(const std::string& what) : std::runtime_error(what) {}
};

struct FieldMismatch : GrmodError {
    explicit FieldMismatch(const std::string& what) : GrmodError(what) {}
};

struct DimensionMismatch : GrmodError {
    explicit DimensionMismatch(const std::string& what) : GrmodError(what) {}
};

// Raised when paths of the maximal length survive the relation ideal:
// either the cap is too small or the algebra is infinite dimensional.
struct NonNilpotent : GrmodError {
    explicit NonNilpotent(const std::string& what) : GrmodError(what) {}
};

struct InhomogeneousRelation : GrmodError {
    explicit InhomogeneousRelation(const std::string& what) : GrmodError(what) {}
};

struct NotSelfInjective : GrmodError {
    explicit NotSelfInjective(const std::string& what) : GrmodError(what) {}
};

struct NotSymmetric : GrmodError {
    explicit NotSymmetric(const std::string& what) : GrmodError(what) {}
};

struct NoGorensteinParameter : GrmodError {
    explicit NoGorensteinParameter(const std::string& what) : GrmodError(what) {}
};

struct TruncationUndefined : GrmodError {
    explicit TruncationUndefined(const std::string& what) : GrmodError(what) {}
};

struct NonDynkin : GrmodError {
    explicit NonDynkin(const std::string& what) : GrmodError(what) {}
};

// The base field is too small to certify a structural answer: some
// endomorphism ring has a semisimple quotient that is a division algebra
// of dimension > 1 over the field.
struct SplitnessWarning : GrmodError {
    explicit SplitnessWarning(const std::string& what) : GrmodError(what) {}
};

struct ParseError : GrmodError {
    explicit ParseError(const std::string& what) : GrmodError(what) {}
};

} // namespace grmod
