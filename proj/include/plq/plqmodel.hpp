#pragma once

/**
 * @file plqmodel.hpp
 * @brief Input PLQ functions, piecewise results, validation and JSON I/O.
 */

#include <string>
#include <variant>
#include <vector>

#include "plq/region.hpp"

namespace plq {

enum class SubdivisionKind { polyhedral, parabolic };
enum class StageTag { envelope, piece_conjugate, max_conjugate };

using PieceFn = std::variant<LinFn, QuadFn, RationalFn>;
using PieceRegion = std::variant<Polytope, ParabolicRegion>;

struct Piece {
    PieceFn fn;
    PieceRegion region;
};

// Piecewise function over a polyhedral or parabolic subdivision.
// Conjugate stages never carry rational pieces, and their quadratic pieces
// are parabolic (discriminant zero); both are enforced at construction.
struct PiecewiseFn {
    SubdivisionKind kind = SubdivisionKind::polyhedral;
    StageTag stage = StageTag::envelope;
    std::vector<Piece> pieces;

    static PiecewiseFn make(SubdivisionKind kind, StageTag stage, std::vector<Piece> pieces);
};

Scalar eval_piece_fn(const PieceFn& f, const Pt& p);
bool region_contains(const PieceRegion& r, const Pt& p);

// Value at p; asserts agreement when several regions contain p.
Scalar eval_piecewise(const PiecewiseFn& f, const Pt& p);

struct PLQFunction {
    std::vector<std::pair<QuadFn, Polytope>> pieces;
    long field_d = 0;

    // Validates the polyhedral subdivision and the field requirements.
    static PLQFunction make(std::vector<std::pair<QuadFn, Polytope>> pieces, long declared_d = 0);

    // min over containing pieces; OutsideDomain when p is in none.
    Scalar eval(const Pt& p) const;
};

PLQFunction load_plq(const std::string& path);
void save_plq(const PLQFunction& f, const std::string& path);

std::string piecewise_to_json(const PiecewiseFn& f);
void save_piecewise(const PiecewiseFn& f, const std::string& path);
PiecewiseFn load_piecewise(const std::string& path);

}  // namespace plq
