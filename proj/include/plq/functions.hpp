#pragma once

/**
 * @file functions.hpp
 * @brief Bivariate affine, quadratic and quadratic-over-affine functions
 *        with exact Scalar coefficients.
 */

#include <optional>
#include <string>
#include <variant>

#include "plq/scalar.hpp"

namespace plq {

struct Pt {
    Scalar x, y;
    bool operator==(const Pt& o) const { return x == o.x && y == o.y; }
};

inline Pt operator-(const Pt& a, const Pt& b) { return {a.x - b.x, a.y - b.y}; }
inline Pt operator+(const Pt& a, const Pt& b) { return {a.x + b.x, a.y + b.y}; }
inline Pt operator*(const Scalar& t, const Pt& a) { return {t * a.x, t * a.y}; }
inline Scalar cross(const Pt& a, const Pt& b) { return a.x * b.y - a.y * b.x; }
inline Scalar dot(const Pt& a, const Pt& b) { return a.x * b.x + a.y * b.y; }

// cx*x + cy*y + c0
struct LinFn {
    Scalar cx, cy, c0;

    Scalar eval(const Pt& p) const { return cx * p.x + cy * p.y + c0; }
    bool is_zero() const { return cx.is_zero() && cy.is_zero() && c0.is_zero(); }
    bool is_constant() const { return cx.is_zero() && cy.is_zero(); }

    LinFn operator+(const LinFn& o) const { return {cx + o.cx, cy + o.cy, c0 + o.c0}; }
    LinFn operator-(const LinFn& o) const { return {cx - o.cx, cy - o.cy, c0 - o.c0}; }
    LinFn operator-() const { return {-cx, -cy, -c0}; }
    LinFn scaled(const Scalar& t) const { return {t * cx, t * cy, t * c0}; }

    bool operator==(const LinFn& o) const { return cx == o.cx && cy == o.cy && c0 == o.c0; }
    std::string str(const std::string& vx = "x", const std::string& vy = "y") const;
};

// qxx*x^2 + qxy*x*y + qyy*y^2 + qx*x + qy*y + q0
struct QuadFn {
    Scalar qxx, qxy, qyy, qx, qy, q0;

    static QuadFn from_linear(const LinFn& l) {
        return {Scalar(0), Scalar(0), Scalar(0), l.cx, l.cy, l.c0};
    }

    Scalar eval(const Pt& p) const {
        return qxx * p.x * p.x + qxy * p.x * p.y + qyy * p.y * p.y + qx * p.x + qy * p.y + q0;
    }
    bool is_zero() const {
        return qxx.is_zero() && qxy.is_zero() && qyy.is_zero() && qx.is_zero() && qy.is_zero() &&
               q0.is_zero();
    }
    bool quad_part_zero() const { return qxx.is_zero() && qxy.is_zero() && qyy.is_zero(); }
    LinFn affine_part() const { return {qx, qy, q0}; }
    QuadFn quad_part() const { return {qxx, qxy, qyy, Scalar(0), Scalar(0), Scalar(0)}; }

    // Value of the quadratic form on a direction.
    Scalar form(const Pt& d) const { return qxx * d.x * d.x + qxy * d.x * d.y + qyy * d.y * d.y; }
    Pt gradient(const Pt& p) const {
        return {Scalar(2) * qxx * p.x + qxy * p.y + qx, qxy * p.x + Scalar(2) * qyy * p.y + qy};
    }

    QuadFn operator+(const QuadFn& o) const {
        return {qxx + o.qxx, qxy + o.qxy, qyy + o.qyy, qx + o.qx, qy + o.qy, q0 + o.q0};
    }
    QuadFn operator-(const QuadFn& o) const {
        return {qxx - o.qxx, qxy - o.qxy, qyy - o.qyy, qx - o.qx, qy - o.qy, q0 - o.q0};
    }
    QuadFn operator-() const { return {-qxx, -qxy, -qyy, -qx, -qy, -q0}; }
    QuadFn operator+(const LinFn& l) const {
        return {qxx, qxy, qyy, qx + l.cx, qy + l.cy, q0 + l.c0};
    }
    QuadFn operator-(const LinFn& l) const { return *this + (-l); }
    QuadFn scaled(const Scalar& t) const {
        return {t * qxx, t * qxy, t * qyy, t * qx, t * qy, t * q0};
    }

    bool operator==(const QuadFn& o) const {
        return qxx == o.qxx && qxy == o.qxy && qyy == o.qyy && qx == o.qx && qy == o.qy &&
               q0 == o.q0;
    }
    std::string str(const std::string& vx = "x", const std::string& vy = "y") const;
};

// qxy^2 - 4*qxx*qyy; zero exactly for parabolic quadratics.
Scalar discriminant(const QuadFn& f);

enum class FormClass { convex, concave, indefinite, affine };

// Exact sign tests on det(Q) and the diagonal; no eigenvalues computed.
FormClass classify_form(const QuadFn& f);

// xi1^2/xi2 + xi0 with linear xi's; xi2 is a scalar multiple of the
// denominator of the rational function it decomposes.
struct PsiForm {
    LinFn xi1, xi2, xi0;
};

struct RationalFn {
    QuadFn num;
    LinFn den;
    std::optional<PsiForm> psi;
    // Designated vertex where den vanishes and the function extends by
    // continuity, together with the extension value.
    std::optional<std::pair<Pt, Scalar>> continuity;

    Scalar eval(const Pt& p) const;
    std::string str() const;
};

// Solve num - xi0*den = rho*xi1^2 exactly (xi2 = den/rho); throws NoPsiForm
// when no solution exists in the scalar field.
PsiForm normalize_rational_psi(const RationalFn& r);
RationalFn normalize_rational(const RationalFn& r);

// Substitution x <- ax*x + bx*y + tx, y <- ay*x + by*y + ty.
struct AffineMap {
    Scalar ax, bx, tx;
    Scalar ay, by, ty;

    Pt apply(const Pt& p) const { return {ax * p.x + bx * p.y + tx, ay * p.x + by * p.y + ty}; }
    Scalar det() const { return ax * by - bx * ay; }
    AffineMap inverse() const;
};

LinFn compose(const LinFn& f, const AffineMap& m);
QuadFn compose(const QuadFn& f, const AffineMap& m);

// Piece functions in the max stage are linear or quadratic only.
using FnLQ = std::variant<LinFn, QuadFn>;

// Demote a quadratic with zero quadratic part to a LinFn.
FnLQ normalize_fn(const FnLQ& f);
Scalar eval_fn(const FnLQ& f, const Pt& p);
bool fn_equal(const FnLQ& a, const FnLQ& b);
bool fn_is_quadratic(const FnLQ& f);
std::string fn_key(const FnLQ& f);
std::string fn_str(const FnLQ& f, const std::string& vx = "x", const std::string& vy = "y");

}  // namespace plq
