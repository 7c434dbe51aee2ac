#include "plq/polytope.hpp"

#include <algorithm>

namespace plq {

void primitive_scale(std::vector<Scalar*> coeffs) {
    // Collect all rational components, scale by lcm(dens)/gcd(nums).
    Int den_lcm = 1, num_gcd = 0;
    long d = 0;
    for (Scalar* s : coeffs) {
        if (s->field_d() != 0) d = s->field_d();
        for (const Rat& r : {s->rat_part(), s->root_part()}) {
            if (r == 0) continue;
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), r.get_den().get_mpz_t());
        }
    }
    for (Scalar* s : coeffs) {
        for (const Rat& r : {s->rat_part(), s->root_part()}) {
            if (r == 0) continue;
            Int scaled = r.get_num() * (den_lcm / r.get_den());
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
        }
    }
    if (num_gcd == 0) return;  // all zero
    Rat factor(den_lcm, num_gcd);
    factor.canonicalize();
    Scalar f{factor};
    for (Scalar* s : coeffs) *s = *s * f;
    (void)d;
}

namespace {

int orient(const Pt& a, const Pt& b, const Pt& c) { return cross(b - a, c - a).sign(); }

bool lex_less(const Pt& a, const Pt& b) {
    int cx = (a.x - b.x).sign();
    if (cx != 0) return cx < 0;
    return (a.y - b.y).sign() < 0;
}

}  // namespace

Polytope Polytope::hull_and_orient(const std::vector<Pt>& points) {
    if (points.empty()) throw Error("hull_and_orient: no points");
    std::vector<Pt> pts = points;
    std::sort(pts.begin(), pts.end(), lex_less);
    pts.erase(std::unique(pts.begin(), pts.end(), [](const Pt& a, const Pt& b) { return a == b; }),
              pts.end());

    Polytope out;
    if (pts.size() == 1) {
        out.verts_ = pts;
        out.build_halfplanes();
        return out;
    }
    // Monotone chain, dropping collinear middle points.
    auto build = [&](bool upper) {
        std::vector<Pt> chain;
        for (size_t idx = 0; idx < pts.size(); ++idx) {
            const Pt& p = pts[upper ? pts.size() - 1 - idx : idx];
            while (chain.size() >= 2 &&
                   orient(chain[chain.size() - 2], chain[chain.size() - 1], p) <= 0)
                chain.pop_back();
            chain.push_back(p);
        }
        return chain;
    };
    std::vector<Pt> lower = build(false), upper = build(true);
    std::vector<Pt> hull(lower.begin(), lower.end() - 1);
    hull.insert(hull.end(), upper.begin(), upper.end() - 1);
    if (hull.size() == 2 || hull.empty()) {
        // Collinear input: keep the extreme segment endpoints.
        out.verts_ = {pts.front(), pts.back()};
    } else {
        out.verts_ = hull;
    }
    out.build_halfplanes();
    return out;
}

void Polytope::build_halfplanes() {
    planes_.clear();
    auto add = [&](LinFn f) {
        primitive_scale({&f.cx, &f.cy, &f.c0});
        planes_.push_back(f);
    };
    if (verts_.size() == 1) {
        const Pt& v = verts_[0];
        add({Scalar(1), Scalar(0), -v.x});
        add({Scalar(-1), Scalar(0), v.x});
        add({Scalar(0), Scalar(1), -v.y});
        add({Scalar(0), Scalar(-1), v.y});
        return;
    }
    if (verts_.size() == 2) {
        const Pt &a = verts_[0], &b = verts_[1];
        Pt d = b - a;
        // On-line constraints (both sides) plus the two end caps.
        LinFn line{d.y, -d.x, -(d.y * a.x - d.x * a.y)};
        add(line);
        add(-line);
        add({-d.x, -d.y, dot(d, a)});        // (p-a).d >= 0
        add({d.x, d.y, -dot(d, b)});         // (p-b).d <= 0
        return;
    }
    size_t n = verts_.size();
    for (size_t i = 0; i < n; ++i) {
        const Pt &a = verts_[i], &b = verts_[(i + 1) % n];
        Pt d = b - a;
        // ccw polygon: interior is to the left, cross(d, p-a) >= 0.
        add({d.y, -d.x, -(d.y * a.x - d.x * a.y)});
    }
}

int Polytope::dim() const {
    if (verts_.size() == 1) return 0;
    if (verts_.size() == 2) return 1;
    return 2;
}

bool Polytope::contains(const Pt& p) const {
    for (const auto& h : planes_)
        if (h.eval(p).sign() > 0) return false;
    return true;
}

bool Polytope::strictly_contains(const Pt& p) const {
    if (dim() < 2) return false;
    for (const auto& h : planes_)
        if (h.eval(p).sign() >= 0) return false;
    return true;
}

bool Polytope::is_vertex(const Pt& p) const {
    for (const auto& v : verts_)
        if (v == p) return true;
    return false;
}

bool Polytope::is_edge(const Pt& a, const Pt& b) const {
    for (auto [i, j] : edges()) {
        if ((verts_[i] == a && verts_[j] == b) || (verts_[i] == b && verts_[j] == a)) return true;
    }
    return false;
}

std::vector<std::pair<int, int>> Polytope::edges() const {
    std::vector<std::pair<int, int>> out;
    size_t n = verts_.size();
    if (n == 2) {
        out.push_back({0, 1});
    } else if (n >= 3) {
        for (size_t i = 0; i < n; ++i) out.push_back({static_cast<int>(i), static_cast<int>((i + 1) % n)});
    }
    return out;
}

Pt Polytope::centroid() const {
    Scalar sx(0), sy(0);
    for (const auto& v : verts_) {
        sx += v.x;
        sy += v.y;
    }
    Scalar n(static_cast<long>(verts_.size()));
    return {sx / n, sy / n};
}

Scalar Polytope::area2() const {
    Scalar a(0);
    size_t n = verts_.size();
    if (n < 3) return a;
    for (size_t i = 0; i < n; ++i) a += cross(verts_[i], verts_[(i + 1) % n]);
    return a;
}

std::vector<Pt> Polytope::intersect(const Polytope& other) const {
    // Clip this polytope's vertex loop by the other's halfplanes, exactly.
    std::vector<Pt> subject = verts_;
    bool closed = subject.size() >= 3;
    for (const auto& h : other.halfplanes()) {
        if (subject.empty()) break;
        std::vector<Pt> out;
        if (subject.size() == 1) {
            if (h.eval(subject[0]).sign() <= 0) out = subject;
        } else {
            size_t n = subject.size();
            size_t m = closed ? n : n - 1;
            for (size_t i = 0; i < m; ++i) {
                const Pt &a = subject[i], &b = subject[(i + 1) % n];
                Scalar fa = h.eval(a), fb = h.eval(b);
                int sa = fa.sign(), sb = fb.sign();
                if (sa <= 0) out.push_back(a);
                if ((sa < 0 && sb > 0) || (sa > 0 && sb < 0)) {
                    Scalar t = fa / (fa - fb);
                    out.push_back({a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)});
                }
            }
            if (!closed && !subject.empty()) {
                const Pt& last = subject.back();
                if (h.eval(last).sign() <= 0) out.push_back(last);
            }
        }
        subject = std::move(out);
    }
    if (subject.empty()) return {};
    // Canonicalize through the hull (removes duplicates / collinear points).
    return Polytope::hull_and_orient(subject).vertices();
}

EdgeLine edge_line(const Pt& a, const Pt& b) {
    EdgeLine e;
    if ((b.x - a.x).is_zero()) {
        e.vertical = true;
        e.c = a.x;
    } else {
        e.m = (b.y - a.y) / (b.x - a.x);
        e.q = a.y - e.m * a.x;
    }
    return e;
}

void validate_subdivision(const std::vector<Polytope>& polys) {
    for (size_t i = 0; i < polys.size(); ++i) {
        for (size_t j = i + 1; j < polys.size(); ++j) {
            std::vector<Pt> inter = polys[i].intersect(polys[j]);
            if (inter.empty()) continue;
            if (inter.size() == 1) {
                if (polys[i].is_vertex(inter[0]) && polys[j].is_vertex(inter[0])) continue;
                throw InvalidSubdivision("pieces " + std::to_string(i) + " and " +
                                         std::to_string(j) +
                                         " meet at a point that is not a vertex of both");
            }
            if (inter.size() == 2) {
                if (polys[i].is_edge(inter[0], inter[1]) && polys[j].is_edge(inter[0], inter[1]))
                    continue;
                throw InvalidSubdivision("pieces " + std::to_string(i) + " and " +
                                         std::to_string(j) +
                                         " overlap along a partial edge");
            }
            throw InvalidSubdivision("pieces " + std::to_string(i) + " and " + std::to_string(j) +
                                     " have overlapping interiors");
        }
    }
}

}  // namespace plq
