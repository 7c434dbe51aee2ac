#pragma once

/**
 * @file polytope.hpp
 * @brief Exact convex polytopes in the plane (V- and H-representation),
 *        entities, and polyhedral subdivision validation.
 */

#include <optional>
#include <vector>

#include "plq/functions.hpp"

namespace plq {

// Scale a list of scalars by a positive rational so all coefficients become
// integers with gcd 1 (used for halfplane and inequality canonicalization).
void primitive_scale(std::vector<Scalar*> coeffs);

class Polytope {
  public:
    Polytope() = default;

    // Convex hull with duplicate removal, counterclockwise order, H-rep.
    static Polytope hull_and_orient(const std::vector<Pt>& points);

    const std::vector<Pt>& vertices() const { return verts_; }
    const std::vector<LinFn>& halfplanes() const { return planes_; }

    int dim() const;  // 0 point, 1 segment, 2 polygon
    bool contains(const Pt& p) const;
    bool strictly_contains(const Pt& p) const;
    bool is_vertex(const Pt& p) const;
    bool is_edge(const Pt& a, const Pt& b) const;

    // Adjacent vertex index pairs (counterclockwise); empty for a point.
    std::vector<std::pair<int, int>> edges() const;

    Pt centroid() const;
    Scalar area2() const;  // twice the signed area (>= 0)

    // Exact intersection with another polytope, as a vertex list
    // (empty / point / segment / polygon in canonical hull form).
    std::vector<Pt> intersect(const Polytope& other) const;

    bool operator==(const Polytope& o) const { return verts_ == o.verts_; }

  private:
    std::vector<Pt> verts_;   // ccw, strictly convex position
    std::vector<LinFn> planes_;  // f <= 0 inside, primitive coefficients
    void build_halfplanes();
};

// Edge slope form y = m*x + q, or vertical x = c.
struct EdgeLine {
    bool vertical = false;
    Scalar m, q;  // when not vertical
    Scalar c;     // when vertical
};
EdgeLine edge_line(const Pt& a, const Pt& b);

// ok iff every pairwise intersection is empty, a shared vertex, or a shared
// full edge; throws InvalidSubdivision naming the offending pair otherwise.
void validate_subdivision(const std::vector<Polytope>& polys);

}  // namespace plq
