#include "plq/plqmodel.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace plq {

using nlohmann::json;

PiecewiseFn PiecewiseFn::make(SubdivisionKind kind, StageTag stage, std::vector<Piece> pieces) {
    for (const auto& p : pieces) {
        bool poly_region = std::holds_alternative<Polytope>(p.region);
        if ((kind == SubdivisionKind::polyhedral) != poly_region)
            throw InternalError("PiecewiseFn: region variant does not match kind");
        if (stage != StageTag::envelope) {
            if (std::holds_alternative<RationalFn>(p.fn))
                throw FractionalFormEncountered("conjugate stage carries a rational piece");
            if (std::holds_alternative<QuadFn>(p.fn) &&
                !discriminant(std::get<QuadFn>(p.fn)).is_zero())
                throw InternalError("conjugate-stage quadratic with nonzero discriminant");
        }
    }
    PiecewiseFn f;
    f.kind = kind;
    f.stage = stage;
    f.pieces = std::move(pieces);
    return f;
}

Scalar eval_piece_fn(const PieceFn& f, const Pt& p) {
    return std::visit([&](const auto& g) { return g.eval(p); }, f);
}

bool region_contains(const PieceRegion& r, const Pt& p) {
    return std::visit([&](const auto& reg) { return reg.contains(p); }, r);
}

Scalar eval_piecewise(const PiecewiseFn& f, const Pt& p) {
    bool found = false;
    Scalar value(0);
    for (const auto& piece : f.pieces) {
        if (!region_contains(piece.region, p)) continue;
        Scalar v = eval_piece_fn(piece.fn, p);
        if (found && !(v == value))
            throw InternalError("eval_piecewise: pieces disagree at " + p.x.str() + "," +
                                p.y.str() + ": " + v.str() + " vs " + value.str());
        value = v;
        found = true;
    }
    if (!found) throw OutsideDomain("eval_piecewise: point outside all regions");
    return value;
}

namespace {

// Field extension a piece's envelope would need: 0 none, d > 0 for sqrt(d).
long required_extension(const QuadFn& q) {
    if (classify_form(q) != FormClass::indefinite) return 0;
    if (q.qxx.is_zero()) return 0;  // factors without a root
    Scalar disc = discriminant(q);
    if (disc.is_rational()) {
        const Rat& r = disc.rat_part();
        Int k, d;
        square_free_decompose(r.get_num() * r.get_den(), k, d);
        if (d == 1) return 0;
        if (!d.fits_slong_p())
            throw UnsupportedField("discriminant square-free part too large");
        return d.get_si();
    }
    if (Scalar::sqrt_in_field(disc)) return 0;  // already inside Q(sqrt(D))
    throw UnsupportedField("piece needs a tower of extensions");
}

}  // namespace

PLQFunction PLQFunction::make(std::vector<std::pair<QuadFn, Polytope>> pieces, long declared_d) {
    std::vector<Polytope> polys;
    for (const auto& [q, p] : pieces) polys.push_back(p);
    validate_subdivision(polys);

    long d = declared_d;
    for (const auto& [q, p] : pieces) {
        long need = required_extension(q);
        if (need == 0) continue;
        if (d == 0)
            d = need;
        else if (d != need)
            throw UnsupportedField("pieces require incompatible extensions sqrt(" +
                                   std::to_string(d) + ") and sqrt(" + std::to_string(need) + ")");
    }
    PLQFunction f;
    f.pieces = std::move(pieces);
    f.field_d = d;
    return f;
}

Scalar PLQFunction::eval(const Pt& p) const {
    bool found = false;
    Scalar best(0);
    for (const auto& [q, poly] : pieces) {
        if (!poly.contains(p)) continue;
        Scalar v = q.eval(p);
        if (!found || v < best) best = v;
        found = true;
    }
    if (!found) throw OutsideDomain("PLQFunction: point outside the domain");
    return best;
}

// ---------------------------------------------------------------------------
// JSON serialization.  Scalars are strings in the canonical textual form.
// ---------------------------------------------------------------------------

namespace {

json quad_json(const QuadFn& q) {
    return json{{"xx", q.qxx.str()}, {"xy", q.qxy.str()}, {"yy", q.qyy.str()},
                {"x", q.qx.str()},   {"y", q.qy.str()},   {"c", q.q0.str()}};
}

json lin_json(const LinFn& l) {
    return json{{"x", l.cx.str()}, {"y", l.cy.str()}, {"c", l.c0.str()}};
}

QuadFn quad_from_json(const json& j) {
    return {Scalar::parse(j.at("xx").get<std::string>()),
            Scalar::parse(j.at("xy").get<std::string>()),
            Scalar::parse(j.at("yy").get<std::string>()),
            Scalar::parse(j.at("x").get<std::string>()),
            Scalar::parse(j.at("y").get<std::string>()),
            Scalar::parse(j.at("c").get<std::string>())};
}

LinFn lin_from_json(const json& j) {
    return {Scalar::parse(j.at("x").get<std::string>()),
            Scalar::parse(j.at("y").get<std::string>()),
            Scalar::parse(j.at("c").get<std::string>())};
}

json fn_json(const PieceFn& f) {
    if (std::holds_alternative<LinFn>(f))
        return json{{"type", "linear"}, {"coeffs", lin_json(std::get<LinFn>(f))}};
    if (std::holds_alternative<QuadFn>(f))
        return json{{"type", "quadratic"}, {"coeffs", quad_json(std::get<QuadFn>(f))}};
    const RationalFn& r = std::get<RationalFn>(f);
    json out{{"type", "rational"}, {"num", quad_json(r.num)}, {"den", lin_json(r.den)}};
    if (r.continuity) {
        out["continuity"] = json{{"at", {r.continuity->first.x.str(), r.continuity->first.y.str()}},
                                 {"value", r.continuity->second.str()}};
    }
    return out;
}

PieceFn fn_from_json(const json& j) {
    std::string type = j.at("type").get<std::string>();
    if (type == "linear") return lin_from_json(j.at("coeffs"));
    if (type == "quadratic") return quad_from_json(j.at("coeffs"));
    if (type != "rational") throw ParseError("unknown function type: " + type);
    RationalFn r;
    r.num = quad_from_json(j.at("num"));
    r.den = lin_from_json(j.at("den"));
    if (j.contains("continuity")) {
        const json& c = j.at("continuity");
        Pt at{Scalar::parse(c.at("at")[0].get<std::string>()),
              Scalar::parse(c.at("at")[1].get<std::string>())};
        r.continuity = {{at, Scalar::parse(c.at("value").get<std::string>())}};
    }
    return normalize_rational(r);
}

json region_json(const PieceRegion& r) {
    if (std::holds_alternative<Polytope>(r)) {
        json verts = json::array();
        for (const auto& v : std::get<Polytope>(r).vertices())
            verts.push_back(json::array({v.x.str(), v.y.str()}));
        return json{{"vertices", verts}};
    }
    json ineqs = json::array();
    for (const auto& i : std::get<ParabolicRegion>(r).inequalities()) {
        const QuadFn& q = i.fn();
        ineqs.push_back(json{{"a", q.qxx.str()},
                             {"b", q.qxy.str()},
                             {"c", q.qyy.str()},
                             {"d", q.qx.str()},
                             {"e", q.qy.str()},
                             {"f", q.q0.str()},
                             {"rel", "le"}});
    }
    return ineqs;
}

}  // namespace

PLQFunction load_plq(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    long d = 0;
    if (j.contains("field_D")) d = j.at("field_D").get<long>();
    if (d < 0) throw ParseError("field_D must be nonnegative");
    std::vector<std::pair<QuadFn, Polytope>> pieces;
    for (const auto& pj : j.at("pieces")) {
        QuadFn q = quad_from_json(pj.at("q"));
        std::vector<Pt> verts;
        for (const auto& vj : pj.at("vertices"))
            verts.push_back({Scalar::parse(vj[0].get<std::string>()),
                             Scalar::parse(vj[1].get<std::string>())});
        if (verts.empty()) throw ParseError("piece with no vertices");
        pieces.push_back({q, Polytope::hull_and_orient(verts)});
    }
    PLQFunction f = PLQFunction::make(std::move(pieces), d);
    // Coefficients must live in the declared field.
    for (const auto& [q, p] : f.pieces) {
        for (const Scalar* s : {&q.qxx, &q.qxy, &q.qyy, &q.qx, &q.qy, &q.q0})
            if (s->field_d() != 0 && s->field_d() != f.field_d)
                throw UnsupportedField("coefficient outside Q(sqrt(D))");
    }
    return f;
}

void save_plq(const PLQFunction& f, const std::string& path) {
    json pieces = json::array();
    for (const auto& [q, p] : f.pieces) {
        json verts = json::array();
        for (const auto& v : p.vertices()) verts.push_back(json::array({v.x.str(), v.y.str()}));
        pieces.push_back(json{{"q", quad_json(q)}, {"vertices", verts}});
    }
    json j{{"field_D", f.field_d}, {"pieces", pieces}};
    std::ofstream out(path);
    out << j.dump(2) << "\n";
}

std::string piecewise_to_json(const PiecewiseFn& f) {
    json pieces = json::array();
    for (const auto& p : f.pieces)
        pieces.push_back(json{{"fn", fn_json(p.fn)}, {"region", region_json(p.region)}});
    const char* kind = f.kind == SubdivisionKind::polyhedral ? "polyhedral" : "parabolic";
    const char* stage = f.stage == StageTag::envelope
                            ? "envelope"
                            : (f.stage == StageTag::piece_conjugate ? "piece_conjugate"
                                                                    : "max_conjugate");
    json j{{"kind", kind}, {"stage", stage}, {"pieces", pieces}};
    return j.dump(2) + "\n";
}

void save_piecewise(const PiecewiseFn& f, const std::string& path) {
    std::ofstream out(path);
    out << piecewise_to_json(f);
}

PiecewiseFn load_piecewise(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    std::string kind = j.at("kind").get<std::string>();
    std::string stage = j.value("stage", "max_conjugate");
    SubdivisionKind k =
        kind == "polyhedral" ? SubdivisionKind::polyhedral : SubdivisionKind::parabolic;
    StageTag st = stage == "envelope"
                      ? StageTag::envelope
                      : (stage == "piece_conjugate" ? StageTag::piece_conjugate
                                                    : StageTag::max_conjugate);
    std::vector<Piece> pieces;
    for (const auto& pj : j.at("pieces")) {
        PieceFn fn = fn_from_json(pj.at("fn"));
        if (k == SubdivisionKind::polyhedral) {
            std::vector<Pt> verts;
            for (const auto& vj : pj.at("region").at("vertices"))
                verts.push_back({Scalar::parse(vj[0].get<std::string>()),
                                 Scalar::parse(vj[1].get<std::string>())});
            pieces.push_back({std::move(fn), Polytope::hull_and_orient(verts)});
        } else {
            std::vector<ParabolicInequality> ineqs;
            for (const auto& ij : pj.at("region")) {
                QuadFn q{Scalar::parse(ij.at("a").get<std::string>()),
                         Scalar::parse(ij.at("b").get<std::string>()),
                         Scalar::parse(ij.at("c").get<std::string>()),
                         Scalar::parse(ij.at("d").get<std::string>()),
                         Scalar::parse(ij.at("e").get<std::string>()),
                         Scalar::parse(ij.at("f").get<std::string>())};
                ineqs.push_back(ParabolicInequality::from(q));
            }
            pieces.push_back({std::move(fn), ParabolicRegion(std::move(ineqs))});
        }
    }
    return PiecewiseFn::make(k, st, std::move(pieces));
}

}  // namespace plq
