#pragma once

/**
 * @file conjugate.hpp
 * @brief Step 2: conjugates of envelope pieces (linear, convex quadratic,
 *        psi-form rational over a polytope) as piecewise linear/quadratic
 *        functions over parabolic subdivisions of the dual plane.
 */

#include "plq/envelope.hpp"

namespace plq {

// Support function style: one linear dual piece per vertex, regions are the
// shifted normal cones; they tile the dual plane.
PiecewiseFn conj_linear(const LinFn& g, const Polytope& p);

// Dual pieces per entity (face / edges / vertices) of a convex quadratic.
PiecewiseFn conj_quadratic_convex(const QuadFn& g, const Polytope& p);

// Conjugate quadratic on a convex edge y = m*x + q_e from the psi form;
// the result always has zero discriminant.
QuadFn zeta_coefficients(const PsiForm& psi, const Scalar& m, const Scalar& q_e);

// Conjugate of an envelope rational piece over its triangle: one quadratic
// piece for the convex edge, linear pieces for the vertices (the apex uses
// the continuity value); six regions tiling the dual plane.
PiecewiseFn conj_rational(const RationalFn& r, const Polytope& triangle,
                          const EnvelopeSupport& support);

PiecewiseFn conj_envelope_piece(const EnvelopePiece& piece);

// Per-entity conjugates of q + I_P itself for an indefinite piece: vertex
// functions plus one three-piece strip per convex edge.  Their pointwise
// max is the piece conjugate; used when the envelope assembly is outside
// the implemented class.
std::vector<PiecewiseFn> direct_entity_conjugates(const QuadFn& q, const Polytope& p);

}  // namespace plq
