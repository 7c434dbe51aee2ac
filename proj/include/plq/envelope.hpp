#pragma once

/**
 * @file envelope.hpp
 * @brief Step 1: convex envelope of a quadratic piece over a polytope, as a
 *        piecewise function with linear, quadratic and rational pieces.
 */

#include "plq/plqmodel.hpp"

namespace plq {

enum class SupportKind { whole, lifted_hull_facet, vertex_edge };

// Structural origin of an envelope piece; vertex_edge keeps the apex vertex
// (where the denominator vanishes) and the convex edge endpoints, all in the
// original coordinates.
struct EnvelopeSupport {
    SupportKind kind = SupportKind::whole;
    Pt apex;
    Pt edge_u, edge_w;
};

struct EnvelopePiece {
    PieceFn fn;
    Polytope region;
    EnvelopeSupport support;
};

struct Envelope {
    QuadFn source;
    Polytope domain;
    std::vector<EnvelopePiece> pieces;

    Scalar eval(const Pt& p) const;  // asserts agreement on shared boundaries
    PiecewiseFn piecewise() const;
};

// The paper's closed form for the piece supported by a vertex (x1, y1) and a
// convex edge y = m*x + q_e of scale*u*v; denominator normalized positive on
// the triangle side of the edge, vanishing exactly at the vertex.
RationalFn rational_piece(const Pt& v, const Scalar& m, const Scalar& q_e, const Scalar& scale);

Envelope envelope_concave(const QuadFn& q, const Polytope& p);
Envelope envelope_indefinite(const QuadFn& q, const Polytope& p);

// Dispatch on classify_form; convex and affine pieces are their own envelope.
Envelope envelope_piece(const QuadFn& q, const Polytope& p);

}  // namespace plq
