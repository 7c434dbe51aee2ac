#include "plq/envelope.hpp"

#include <algorithm>
#include <map>

namespace plq {

Scalar Envelope::eval(const Pt& p) const {
    bool found = false;
    Scalar value(0);
    for (const auto& piece : pieces) {
        if (!piece.region.contains(p)) continue;
        Scalar v = eval_piece_fn(piece.fn, p);
        if (found && !(v == value))
            throw InternalError("envelope pieces disagree at a shared point");
        value = v;
        found = true;
    }
    if (!found) throw OutsideDomain("envelope: point outside the piece domain");
    return value;
}

PiecewiseFn Envelope::piecewise() const {
    std::vector<Piece> out;
    for (const auto& p : pieces) out.push_back({p.fn, p.region});
    return PiecewiseFn::make(SubdivisionKind::polyhedral, StageTag::envelope, std::move(out));
}

RationalFn rational_piece(const Pt& v, const Scalar& m, const Scalar& q_e, const Scalar& scale) {
    const Scalar &x1 = v.x, &y1 = v.y;
    Scalar offset = q_e + m * x1 - y1;  // edge line evaluated against the vertex
    if (offset.is_zero())
        throw DegenerateDenominator("rational_piece: vertex lies on the edge line");

    QuadFn num{-m * y1,
               q_e,
               x1,
               -q_e * y1 + m * x1 * y1,
               -q_e * x1 - x1 * y1,
               q_e * x1 * y1};
    LinFn den{-m, Scalar(1), m * x1 - y1};

    // Denominator positive on the edge side of the line through the vertex:
    // test at a point of the edge line itself.
    if (den.eval({Scalar(0), q_e}).sign() < 0) {
        num = -num;
        den = -den;
    }
    num = num.scaled(scale);

    RationalFn r;
    r.num = num;
    r.den = den;
    r.continuity = {{v, scale * x1 * y1}};
    return normalize_rational(r);
}

namespace {

// Plane z = a*x + b*y + c through three lifted points.
LinFn plane_through(const Pt& p1, const Scalar& z1, const Pt& p2, const Scalar& z2, const Pt& p3,
                    const Scalar& z3) {
    Scalar det = cross(p2 - p1, p3 - p1);
    if (det.is_zero()) throw InternalError("plane_through: collinear projections");
    // Solve [x_i y_i 1][a b c]^T = z_i by Cramer's rule.
    Scalar dz2 = z2 - z1, dz3 = z3 - z1;
    Pt d2 = p2 - p1, d3 = p3 - p1;
    Scalar a = (dz2 * d3.y - dz3 * d2.y) / det;
    Scalar b = (d2.x * dz3 - d3.x * dz2) / det;
    Scalar c = z1 - a * p1.x - b * p1.y;
    return {a, b, c};
}

std::string plane_key(const LinFn& l) { return l.cx.str() + "|" + l.cy.str() + "|" + l.c0.str(); }

// Lower facets of the lifted vertex set {(v, z(v))}: each facet is the graph
// of a supporting plane, its region the hull of the touching vertices.
struct Facet {
    LinFn plane;
    Polytope region;
};

std::vector<Facet> lifted_lower_hull(const std::vector<Pt>& verts,
                                     const std::vector<Scalar>& z) {
    std::map<std::string, LinFn> planes;
    size_t n = verts.size();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            for (size_t k = j + 1; k < n; ++k) {
                if (cross(verts[j] - verts[i], verts[k] - verts[i]).is_zero()) continue;
                LinFn pl = plane_through(verts[i], z[i], verts[j], z[j], verts[k], z[k]);
                bool lower = true;
                for (size_t l = 0; l < n && lower; ++l)
                    if ((z[l] - pl.eval(verts[l])).sign() < 0) lower = false;
                if (lower) planes.emplace(plane_key(pl), pl);
            }
    std::vector<Facet> out;
    for (auto& [key, pl] : planes) {
        std::vector<Pt> on;
        for (size_t l = 0; l < n; ++l)
            if ((z[l] - pl.eval(verts[l])).is_zero()) on.push_back(verts[l]);
        if (on.size() < 3) continue;
        Polytope region = Polytope::hull_and_orient(on);
        if (region.dim() == 2) out.push_back({pl, region});
    }
    return out;
}

LinFn chord_on_segment(const QuadFn& q, const Pt& u, const Pt& w) {
    Pt d = w - u;
    Scalar len2 = dot(d, d);
    Scalar zu = q.eval(u), zw = q.eval(w);
    Scalar slope = (zw - zu) / len2;
    // l(p) = zu + slope * d.(p - u)
    return {slope * d.x, slope * d.y, zu - slope * dot(d, u)};
}

EnvelopeSupport whole_support() { return EnvelopeSupport{SupportKind::whole, {}, {}, {}}; }

// Exact min of A t^2 + B t + C over [0, 1] is nonnegative.
bool quad_min_nonneg(const Scalar& A, const Scalar& B, const Scalar& C) {
    if (C.sign() < 0) return false;
    if ((A + B + C).sign() < 0) return false;
    if (A.sign() > 0) {
        Scalar tstar = -B / (Scalar(2) * A);
        if (tstar.sign() > 0 && (tstar - Scalar(1)).sign() < 0) {
            // 4A * min = 4AC - B^2
            if ((Scalar(4) * A * C - B * B).sign() < 0) return false;
        }
    }
    return true;
}

}  // namespace

Envelope envelope_concave(const QuadFn& q, const Polytope& p) {
    Envelope env;
    env.source = q;
    env.domain = p;
    if (p.dim() == 0) {
        env.pieces.push_back({q, p, whole_support()});
        return env;
    }
    if (p.dim() == 1) {
        LinFn chord = chord_on_segment(q, p.vertices()[0], p.vertices()[1]);
        env.pieces.push_back({chord, p, whole_support()});
        return env;
    }
    std::vector<Scalar> z;
    for (const auto& v : p.vertices()) z.push_back(q.eval(v));
    auto facets = lifted_lower_hull(p.vertices(), z);
    Scalar covered(0);
    for (auto& f : facets) {
        covered += f.region.area2();
        env.pieces.push_back({f.plane, f.region, {SupportKind::lifted_hull_facet, {}, {}, {}}});
    }
    if (!(covered == p.area2()))
        throw InternalError("envelope_concave: lower hull does not tile the polytope");
    return env;
}

namespace {

// Q = l1 * l2 for an indefinite homogeneous quadratic part.
void factor_indefinite(const QuadFn& q, LinFn& l1, LinFn& l2) {
    Scalar zero(0);
    if (!q.qxx.is_zero()) {
        Scalar disc = discriminant(q);
        auto s = Scalar::sqrt_in_field(disc);
        if (!s)
            throw UnsupportedField("envelope: factorization needs sqrt(" + disc.str() +
                                   ") outside the instance field");
        Scalar r1 = (q.qxy + *s) / (Scalar(2) * q.qxx);
        Scalar r2 = (q.qxy - *s) / (Scalar(2) * q.qxx);
        l1 = {q.qxx, q.qxx * r1, zero};
        l2 = {Scalar(1), r2, zero};
    } else if (!q.qyy.is_zero()) {
        l1 = {q.qxy, q.qyy, zero};
        l2 = {zero, Scalar(1), zero};
    } else {
        l1 = {q.qxy, zero, zero};
        l2 = {zero, Scalar(1), zero};
    }
}

struct UvCandidate {
    bool rational = false;
    LinFn plane;          // facet candidates
    RationalFn ratio;     // rational candidates
    Polytope region;      // in uv coordinates
    Pt apex, eu, ew;      // rational support, uv coordinates
};

// Both directions inside one closed quadrant where u*v is concave.
bool cone_concave(const Pt& d1, const Pt& d2) {
    auto in_q4 = [](const Pt& d) { return d.x.sign() >= 0 && d.y.sign() <= 0; };
    auto in_q2 = [](const Pt& d) { return d.x.sign() <= 0 && d.y.sign() >= 0; };
    return (in_q4(d1) && in_q4(d2)) || (in_q2(d1) && in_q2(d2));
}

// plane <= u*v along every convex edge of the polytope (exact dip test);
// with concave and affine edges handled by the vertex values, this certifies
// a global affine minorant of u*v + I_P.
bool facet_valid(const LinFn& plane, const Polytope& p) {
    for (auto [i, j] : p.edges()) {
        const Pt &a = p.vertices()[i], &b = p.vertices()[j];
        Pt d = b - a;
        Scalar curv = d.x * d.y;  // quadratic form of uv on the direction
        if (curv.sign() <= 0) continue;
        // (uv - plane)(a + t d) = curv t^2 + B t + C on [0, 1]
        Scalar C = a.x * a.y - plane.eval(a);
        Scalar B = a.x * d.y + a.y * d.x - plane.cx * d.x - plane.cy * d.y;
        if (!quad_min_nonneg(curv, B, C)) return false;
    }
    return true;
}

}  // namespace

Envelope envelope_indefinite(const QuadFn& q, const Polytope& p) {
    LinFn affine = q.affine_part();
    QuadFn quad = q.quad_part();

    LinFn l1, l2;
    factor_indefinite(quad, l1, l2);
    AffineMap to_uv{l1.cx, l1.cy, Scalar(0), l2.cx, l2.cy, Scalar(0)};
    if (to_uv.det().is_zero()) throw InternalError("envelope: singular factor map");
    AffineMap from_uv = to_uv.inverse();
    {
        QuadFn check = compose(QuadFn{Scalar(0), Scalar(1), Scalar(0), Scalar(0), Scalar(0),
                                      Scalar(0)},
                               to_uv);
        if (!(check == quad)) throw InternalError("envelope: factorization check failed");
    }

    std::vector<Pt> uv_verts;
    for (const auto& v : p.vertices()) uv_verts.push_back(to_uv.apply(v));
    Polytope puv = Polytope::hull_and_orient(uv_verts);
    if (puv.vertices().size() != p.vertices().size())
        throw InternalError("envelope: transformed polytope lost vertices");

    // Candidates for u*v over puv.
    std::vector<Scalar> z;
    for (const auto& v : puv.vertices()) z.push_back(v.x * v.y);
    auto facets = lifted_lower_hull(puv.vertices(), z);

    std::vector<UvCandidate> rationals;
    for (auto [i, j] : puv.edges()) {
        const Pt &eu = puv.vertices()[i], &ew = puv.vertices()[j];
        Pt d = ew - eu;
        if ((d.x * d.y).sign() <= 0) continue;  // convex edges only
        Scalar m = d.y / d.x;
        Scalar q_e = eu.y - m * eu.x;
        for (const auto& w : puv.vertices()) {
            if (w == eu || w == ew) continue;
            if ((w.y - m * w.x - q_e).is_zero()) continue;
            if (!cone_concave(eu - w, ew - w)) continue;
            UvCandidate cand;
            cand.rational = true;
            cand.ratio = rational_piece(w, m, q_e, Scalar(1));
            cand.region = Polytope::hull_and_orient({w, eu, ew});
            cand.apex = w;
            cand.eu = eu;
            cand.ew = ew;
            rationals.push_back(std::move(cand));
        }
    }

    // Assembly: keep valid facets; each invalid facet must be a triangle
    // replaced by the rational candidate over the same triangle.
    std::vector<UvCandidate> chosen;
    for (auto& f : facets) {
        if (facet_valid(f.plane, puv)) {
            UvCandidate c;
            c.plane = f.plane;
            c.region = f.region;
            chosen.push_back(std::move(c));
            continue;
        }
        bool matched = false;
        for (auto& r : rationals) {
            if (r.region == f.region) {
                chosen.push_back(r);
                matched = true;
                break;
            }
        }
        if (!matched)
            throw EnvelopeAssemblyFailure(
                "no verified piece covers a lifted-hull cell; input outside the implemented "
                "envelope class");
    }

    // The facet projections tile the polytope; verify and build the result.
    Scalar covered(0);
    std::vector<Polytope> regions;
    for (const auto& c : chosen) {
        covered += c.region.area2();
        regions.push_back(c.region);
    }
    if (!(covered == puv.area2()))
        throw EnvelopeAssemblyFailure("assembled regions do not cover the polytope");
    try {
        validate_subdivision(regions);
    } catch (const InvalidSubdivision&) {
        throw EnvelopeAssemblyFailure("assembled regions overlap");
    }

    Envelope env;
    env.source = q;
    env.domain = p;
    for (const auto& c : chosen) {
        std::vector<Pt> back;
        for (const auto& v : c.region.vertices()) back.push_back(from_uv.apply(v));
        Polytope region_xy = Polytope::hull_and_orient(back);
        if (!c.rational) {
            LinFn fn = compose(c.plane, to_uv) + affine;
            env.pieces.push_back({fn, region_xy, {SupportKind::lifted_hull_facet, {}, {}, {}}});
        } else {
            RationalFn r;
            r.num = compose(c.ratio.num, to_uv);
            r.den = compose(c.ratio.den, to_uv);
            // Add the affine part: num/den + L = (num + L*den)/den.
            QuadFn lden{affine.cx * r.den.cx,
                        affine.cx * r.den.cy + affine.cy * r.den.cx,
                        affine.cy * r.den.cy,
                        affine.cx * r.den.c0 + affine.c0 * r.den.cx,
                        affine.cy * r.den.c0 + affine.c0 * r.den.cy,
                        affine.c0 * r.den.c0};
            r.num = r.num + lden;
            Pt apex_xy = from_uv.apply(c.apex);
            r.continuity = {{apex_xy, c.ratio.continuity->second + affine.eval(apex_xy)}};
            r = normalize_rational(r);
            EnvelopeSupport sup{SupportKind::vertex_edge, apex_xy, from_uv.apply(c.eu),
                                from_uv.apply(c.ew)};
            env.pieces.push_back({r, region_xy, sup});
        }
    }

    // Cross-checks: tightness at the polytope vertices and continuity plus
    // midpoint convexity at a deterministic sample.
    try {
        for (const auto& v : p.vertices())
            if (!(env.eval(v) == q.eval(v)))
                throw EnvelopeAssemblyFailure("envelope not tight at an input vertex");
        std::vector<Pt> probes = p.vertices();
        for (const auto& piece : env.pieces) probes.push_back(piece.region.centroid());
        Scalar half(1, 2);
        for (size_t i = 0; i < probes.size(); ++i)
            for (size_t j = i + 1; j < probes.size(); ++j) {
                Pt mid{half * (probes[i].x + probes[j].x), half * (probes[i].y + probes[j].y)};
                Scalar lhs = Scalar(2) * env.eval(mid);
                Scalar rhs = env.eval(probes[i]) + env.eval(probes[j]);
                if ((rhs - lhs).sign() < 0)
                    throw EnvelopeAssemblyFailure("assembled envelope fails midpoint convexity");
            }
    } catch (const Error& e) {
        throw EnvelopeAssemblyFailure(std::string("envelope verification failed: ") + e.what());
    }
    return env;
}

Envelope envelope_piece(const QuadFn& q, const Polytope& p) {
    Envelope env;
    env.source = q;
    env.domain = p;
    if (p.dim() == 0) {
        env.pieces.push_back({q, p, whole_support()});
        return env;
    }
    if (p.dim() == 1) {
        Pt d = p.vertices()[1] - p.vertices()[0];
        if (q.form(d).sign() >= 0) {
            env.pieces.push_back({q, p, whole_support()});
        } else {
            env.pieces.push_back(
                {chord_on_segment(q, p.vertices()[0], p.vertices()[1]), p, whole_support()});
        }
        return env;
    }
    switch (classify_form(q)) {
        case FormClass::affine: {
            env.pieces.push_back({q.affine_part(), p, whole_support()});
            return env;
        }
        case FormClass::convex: {
            env.pieces.push_back({q, p, whole_support()});
            return env;
        }
        case FormClass::concave:
            return envelope_concave(q, p);
        case FormClass::indefinite:
            return envelope_indefinite(q, p);
    }
    throw InternalError("envelope_piece: unreachable");
}

}  // namespace plq
