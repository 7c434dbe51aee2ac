#pragma once

#include <stdexcept>
#include <string>

namespace plq {

// Base for all pipeline errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
    using Error::Error;
};

// Instance requires a field extension outside the single Q(sqrt(D)) supported.
struct UnsupportedField : Error {
    using Error::Error;
};

struct InvalidSubdivision : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

struct OutsideDomain : Error {
    using Error::Error;
};

// No xi1^2/xi2 + xi0 decomposition exists in the scalar field.
struct NoPsiForm : Error {
    using Error::Error;
};

// Vertex lies on the line of the chosen convex edge.
struct DegenerateDenominator : Error {
    using Error::Error;
};

// Candidate selection could not tile the polytope with verified pieces.
struct EnvelopeAssemblyFailure : Error {
    using Error::Error;
};

struct DegenerateEdge : Error {
    using Error::Error;
};

// A conjugate piece came out quadratic-over-linear; contradicts the
// structure theorem and signals a pipeline bug, never a user error.
struct FractionalFormEncountered : Error {
    using Error::Error;
};

// A max comparison paired two distinct non-linear functions whose
// difference is not a parabolic curve; the split is unrepresentable.
struct BothNonlinear : Error {
    using Error::Error;
};

struct InternalError : Error {
    using Error::Error;
};

}  // namespace plq
