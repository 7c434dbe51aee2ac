#include "plq/functions.hpp"

#include <sstream>

namespace plq {

namespace {

void append_term(std::ostream& os, bool& first, const Scalar& c, const std::string& mono) {
    if (c.is_zero()) return;
    std::string cs = c.str();
    if (!first && cs[0] != '-') os << "+";
    if (mono.empty()) {
        os << cs;
    } else if (cs == "1") {
        os << mono;
    } else if (cs == "-1") {
        os << "-" << mono;
    } else {
        os << cs << "*" << mono;
    }
    first = false;
}

}  // namespace

std::string LinFn::str(const std::string& vx, const std::string& vy) const {
    std::ostringstream os;
    bool first = true;
    append_term(os, first, cx, vx);
    append_term(os, first, cy, vy);
    append_term(os, first, c0, "");
    if (first) os << "0";
    return os.str();
}

std::string QuadFn::str(const std::string& vx, const std::string& vy) const {
    std::ostringstream os;
    bool first = true;
    append_term(os, first, qxx, vx + "^2");
    append_term(os, first, qxy, vx + "*" + vy);
    append_term(os, first, qyy, vy + "^2");
    append_term(os, first, qx, vx);
    append_term(os, first, qy, vy);
    append_term(os, first, q0, "");
    if (first) os << "0";
    return os.str();
}

Scalar discriminant(const QuadFn& f) { return f.qxy * f.qxy - Scalar(4) * f.qxx * f.qyy; }

FormClass classify_form(const QuadFn& f) {
    if (f.quad_part_zero()) return FormClass::affine;
    // det of [[qxx, qxy/2],[qxy/2, qyy]]
    Scalar det = f.qxx * f.qyy - f.qxy * f.qxy / Scalar(4);
    int sd = det.sign();
    if (sd < 0) return FormClass::indefinite;
    if (sd > 0) return f.qxx.sign() > 0 ? FormClass::convex : FormClass::concave;
    // Semidefinite: sign given by the nonzero diagonal entries.
    int sx = f.qxx.sign(), sy = f.qyy.sign();
    if (sx > 0 || sy > 0) return FormClass::convex;
    if (sx < 0 || sy < 0) return FormClass::concave;
    // qxx = qyy = 0 and det = 0 forces qxy = 0, handled above.
    throw InternalError("classify_form: unreachable");
}

Scalar RationalFn::eval(const Pt& p) const {
    Scalar d = den.eval(p);
    if (d.is_zero()) {
        if (continuity && continuity->first == p) return continuity->second;
        throw DivisionByZero("RationalFn: denominator vanishes at evaluation point");
    }
    return num.eval(p) / d;
}

std::string RationalFn::str() const { return "(" + num.str() + ")/(" + den.str() + ")"; }

namespace {

// Divide a quadratic that vanishes on the line den = 0 by den, exactly.
LinFn divide_by_line(const QuadFn& g, const LinFn& den) {
    // g = den * (ux*x + uy*y + u0): match coefficients and check remainder.
    Scalar ux, uy, u0;
    if (!den.cx.is_zero()) {
        ux = g.qxx / den.cx;
        uy = (g.qxy - den.cy * ux) / den.cx;
        u0 = (g.qx - den.c0 * ux) / den.cx;
    } else {
        // den = cy*y + c0, cy != 0
        ux = g.qxy / den.cy;
        uy = g.qyy / den.cy;
        u0 = (g.qy - den.c0 * uy) / den.cy;
    }
    LinFn q{ux, uy, u0};
    // Verify the product reproduces g.
    QuadFn prod{den.cx * q.cx,
                den.cx * q.cy + den.cy * q.cx,
                den.cy * q.cy,
                den.cx * q.c0 + den.c0 * q.cx,
                den.cy * q.c0 + den.c0 * q.cy,
                den.c0 * q.c0};
    if (!(prod == g)) throw NoPsiForm("normalize_rational: numerator not divisible by denominator");
    return q;
}

QuadFn lin_square(const LinFn& l, const Scalar& rho) {
    return {rho * l.cx * l.cx,
            Scalar(2) * rho * l.cx * l.cy,
            rho * l.cy * l.cy,
            Scalar(2) * rho * l.cx * l.c0,
            Scalar(2) * rho * l.cy * l.c0,
            rho * l.c0 * l.c0};
}

// g = rho * L^2 for a linear L, when such a factorization exists.
std::optional<std::pair<Scalar, LinFn>> try_global_square(const QuadFn& g) {
    if (!g.qxx.is_zero()) {
        Scalar rho = g.qxx;
        LinFn l{Scalar(1), g.qxy / (Scalar(2) * rho), g.qx / (Scalar(2) * rho)};
        if (lin_square(l, rho) == g) return {{rho, l}};
        return std::nullopt;
    }
    if (!g.qyy.is_zero()) {
        Scalar rho = g.qyy;
        LinFn l{Scalar(0), Scalar(1), g.qy / (Scalar(2) * rho)};
        if (lin_square(l, rho) == g) return {{rho, l}};
        return std::nullopt;
    }
    return std::nullopt;
}

}  // namespace

PsiForm normalize_rational_psi(const RationalFn& r) {
    const LinFn& den = r.den;
    if (den.is_zero()) throw NoPsiForm("normalize_rational: zero denominator");
    if (den.is_constant()) throw NoPsiForm("normalize_rational: constant denominator");

    // A globally square numerator gives the xi0 = 0 decomposition directly.
    if (auto sq = try_global_square(r.num)) {
        LinFn xi2 = den.scaled(Scalar(1) / sq->first);
        return PsiForm{sq->second, xi2, LinFn{Scalar(0), Scalar(0), Scalar(0)}};
    }

    // Restrict num to the line den = 0, parameterized by x (or by y when the
    // line is vertical).  p2*t^2 + p1*t + p0 in the parameter.
    Scalar p2, p1, p0;
    bool by_x = !den.cy.is_zero();
    if (by_x) {
        // y = -(cx*x + c0)/cy
        Scalar m = -den.cx / den.cy, b = -den.c0 / den.cy;
        const QuadFn& n = r.num;
        p2 = n.qxx + n.qxy * m + n.qyy * m * m;
        p1 = n.qxy * b + Scalar(2) * n.qyy * m * b + n.qx + n.qy * m;
        p0 = n.qyy * b * b + n.qy * b + n.q0;
    } else {
        Scalar c = -den.c0 / den.cx;  // x = c
        const QuadFn& n = r.num;
        p2 = n.qyy;
        p1 = n.qxy * c + n.qy;
        p0 = n.qxx * c * c + n.qx * c + n.q0;
    }

    LinFn xi1;
    Scalar rho;
    if (p2.is_zero() && p1.is_zero() && p0.is_zero()) {
        xi1 = {Scalar(0), Scalar(0), Scalar(0)};
        rho = Scalar(1);
    } else if (!p2.is_zero()) {
        Scalar disc = p1 * p1 - Scalar(4) * p2 * p0;
        if (!disc.is_zero())
            throw NoPsiForm("normalize_rational: restriction to the line is not a square");
        rho = p2;
        Scalar shift = p1 / (Scalar(2) * p2);  // (t + shift)^2 * rho
        xi1 = by_x ? LinFn{Scalar(1), Scalar(0), shift} : LinFn{Scalar(0), Scalar(1), shift};
    } else if (p1.is_zero()) {
        // Constant restriction: xi1 = 1, rho = p0.
        rho = p0;
        xi1 = {Scalar(0), Scalar(0), Scalar(1)};
    } else {
        throw NoPsiForm("normalize_rational: linear restriction cannot be a square");
    }

    // xi0 = (num - rho*xi1^2)/den, exact.
    QuadFn residual = r.num - lin_square(xi1, rho);
    LinFn xi0 = residual.is_zero() ? LinFn{Scalar(0), Scalar(0), Scalar(0)}
                                   : divide_by_line(residual, den);
    LinFn xi2 = den.scaled(Scalar(1) / rho);

    // Re-verify the cross-multiplied identity: num = rho*xi1^2 + xi0*den.
    QuadFn check = lin_square(xi1, rho);
    check = check + QuadFn{den.cx * xi0.cx,
                           den.cx * xi0.cy + den.cy * xi0.cx,
                           den.cy * xi0.cy,
                           den.cx * xi0.c0 + den.c0 * xi0.cx,
                           den.cy * xi0.c0 + den.c0 * xi0.cy,
                           den.c0 * xi0.c0};
    if (!(check == r.num)) throw InternalError("normalize_rational: identity check failed");
    return PsiForm{xi1, xi2, xi0};
}

RationalFn normalize_rational(const RationalFn& r) {
    RationalFn out = r;
    out.psi = normalize_rational_psi(r);
    return out;
}

AffineMap AffineMap::inverse() const {
    Scalar d = det();
    if (d.is_zero()) throw InternalError("AffineMap: singular");
    AffineMap inv;
    inv.ax = by / d;
    inv.bx = -bx / d;
    inv.ay = -ay / d;
    inv.by = ax / d;
    inv.tx = -(inv.ax * tx + inv.bx * ty);
    inv.ty = -(inv.ay * tx + inv.by * ty);
    return inv;
}

LinFn compose(const LinFn& f, const AffineMap& m) {
    return {f.cx * m.ax + f.cy * m.ay, f.cx * m.bx + f.cy * m.by,
            f.cx * m.tx + f.cy * m.ty + f.c0};
}

QuadFn compose(const QuadFn& f, const AffineMap& m) {
    // x' = ax*x + bx*y + tx, y' = ay*x + by*y + ty
    QuadFn out;
    out.qxx = f.qxx * m.ax * m.ax + f.qxy * m.ax * m.ay + f.qyy * m.ay * m.ay;
    out.qyy = f.qxx * m.bx * m.bx + f.qxy * m.bx * m.by + f.qyy * m.by * m.by;
    out.qxy = Scalar(2) * f.qxx * m.ax * m.bx + f.qxy * (m.ax * m.by + m.bx * m.ay) +
              Scalar(2) * f.qyy * m.ay * m.by;
    out.qx = Scalar(2) * f.qxx * m.ax * m.tx + f.qxy * (m.ax * m.ty + m.tx * m.ay) +
             Scalar(2) * f.qyy * m.ay * m.ty + f.qx * m.ax + f.qy * m.ay;
    out.qy = Scalar(2) * f.qxx * m.bx * m.tx + f.qxy * (m.bx * m.ty + m.tx * m.by) +
             Scalar(2) * f.qyy * m.by * m.ty + f.qx * m.bx + f.qy * m.by;
    out.q0 = f.qxx * m.tx * m.tx + f.qxy * m.tx * m.ty + f.qyy * m.ty * m.ty + f.qx * m.tx +
             f.qy * m.ty + f.q0;
    return out;
}

FnLQ normalize_fn(const FnLQ& f) {
    if (std::holds_alternative<QuadFn>(f)) {
        const QuadFn& q = std::get<QuadFn>(f);
        if (q.quad_part_zero()) return q.affine_part();
    }
    return f;
}

Scalar eval_fn(const FnLQ& f, const Pt& p) {
    return std::visit([&](const auto& g) { return g.eval(p); }, f);
}

bool fn_equal(const FnLQ& a, const FnLQ& b) {
    FnLQ na = normalize_fn(a), nb = normalize_fn(b);
    if (na.index() != nb.index()) return false;
    if (std::holds_alternative<LinFn>(na))
        return std::get<LinFn>(na) == std::get<LinFn>(nb);
    return std::get<QuadFn>(na) == std::get<QuadFn>(nb);
}

bool fn_is_quadratic(const FnLQ& f) {
    return std::holds_alternative<QuadFn>(normalize_fn(f));
}

std::string fn_key(const FnLQ& f) {
    FnLQ n = normalize_fn(f);
    if (std::holds_alternative<LinFn>(n)) {
        const LinFn& l = std::get<LinFn>(n);
        return "L|" + l.cx.str() + "|" + l.cy.str() + "|" + l.c0.str();
    }
    const QuadFn& q = std::get<QuadFn>(n);
    return "Q|" + q.qxx.str() + "|" + q.qxy.str() + "|" + q.qyy.str() + "|" + q.qx.str() + "|" +
           q.qy.str() + "|" + q.q0.str();
}

std::string fn_str(const FnLQ& f, const std::string& vx, const std::string& vy) {
    FnLQ n = normalize_fn(f);
    if (std::holds_alternative<LinFn>(n)) return std::get<LinFn>(n).str(vx, vy);
    return std::get<QuadFn>(n).str(vx, vy);
}

}  // namespace plq
