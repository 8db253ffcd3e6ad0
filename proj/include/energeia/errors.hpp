#pragma once

#include <stdexcept>
#include <string>

namespace energeia {

// Base for every error the library throws deliberately.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define ENERGEIA_ERROR(NAME)                                        \
    class NAME : public Error {                                     \
    public:                                                         \
        explicit NAME(const std::string& msg) : Error(#NAME ": " + msg) {} \
    }

ENERGEIA_ERROR(InvalidSimplex);    // empty vertex list
ENERGEIA_ERROR(InvalidLabel);      // non-positive vertex label
ENERGEIA_ERROR(NotAMember);        // simplex not in the geometry
ENERGEIA_ERROR(NotASubset);        // y is not contained in x
ENERGEIA_ERROR(RingMismatch);      // mixed ring tags in one operation
ENERGEIA_ERROR(UnsupportedRing);   // operation undefined for this ring
ENERGEIA_ERROR(ShapeError);        // matrix/vector dimension mismatch
ENERGEIA_ERROR(NotAComplex);       // operation needs the simplicial-complex axiom
ENERGEIA_ERROR(NotSelfAdjoint);    // eigen-solve requires m = m*
ENERGEIA_ERROR(ZeroEnergy);        // some h(x) = 0 where nonzero is required
ENERGEIA_ERROR(SingularOperator);  // matrix not invertible / zero pivot
ENERGEIA_ERROR(IoError);           // file or format problem

#undef ENERGEIA_ERROR

} // namespace energeia
