#include "plq/region.hpp"

#include <algorithm>
#include <map>

#include "plq/polynomial.hpp"

namespace plq {

ParabolicInequality ParabolicInequality::from(const QuadFn& fn) {
    QuadFn f = fn;
    if (f.is_zero()) throw Error("ParabolicInequality: zero coefficients");
    if (!discriminant(f).is_zero())
        throw Error("ParabolicInequality: b^2-4ac != 0 for " + f.str());
    primitive_scale({&f.qxx, &f.qxy, &f.qyy, &f.qx, &f.qy, &f.q0});
    std::string key = f.qxx.str() + "|" + f.qxy.str() + "|" + f.qyy.str() + "|" + f.qx.str() +
                      "|" + f.qy.str() + "|" + f.q0.str();
    return ParabolicInequality(std::move(f), std::move(key));
}

ParabolicInequality ParabolicInequality::from_linear(const LinFn& l) {
    return from(QuadFn::from_linear(l));
}

ParabolicInequality ParabolicInequality::negated() const { return from(-f_); }

ParabolicRegion::ParabolicRegion(std::vector<ParabolicInequality> ineqs, std::optional<Pt> witness)
    : witness_(std::move(witness)) {
    for (auto& i : ineqs) {
        bool dup = false;
        for (const auto& j : ineqs_)
            if (j == i) {
                dup = true;
                break;
            }
        if (!dup) ineqs_.push_back(std::move(i));
    }
}

void ParabolicRegion::set_witness(const Pt& p) {
    if (!strictly_contains(p)) throw InternalError("ParabolicRegion: witness not strict");
    witness_ = p;
}

bool ParabolicRegion::contains(const Pt& p) const {
    for (const auto& i : ineqs_)
        if (i.eval(p).sign() > 0) return false;
    return true;
}

bool ParabolicRegion::strictly_contains(const Pt& p) const {
    for (const auto& i : ineqs_)
        if (i.eval(p).sign() >= 0) return false;
    return true;
}

ParabolicRegion ParabolicRegion::with(const ParabolicInequality& extra) const {
    std::vector<ParabolicInequality> all = ineqs_;
    all.push_back(extra);
    return ParabolicRegion(std::move(all));
}

std::string ParabolicRegion::key() const {
    std::vector<std::string> keys;
    for (const auto& i : ineqs_) keys.push_back(i.key());
    std::sort(keys.begin(), keys.end());
    std::string out;
    for (const auto& k : keys) out += k + ";";
    return out;
}

// ---------------------------------------------------------------------------
// Interior search: cylindrical decomposition in x restricted to what conics
// need (pairwise resultants, y-discriminants, leading-coefficient roots),
// then exact sampling on vertical lines between critical abscissae.
// ---------------------------------------------------------------------------

namespace {

bool all_strict(const std::vector<QuadFn>& cs, const Pt& p) {
    for (const auto& c : cs)
        if (c.eval(p).sign() >= 0) return false;
    return true;
}

// Gather candidate sample values from isolating intervals: below the first
// root, between consecutive roots, above the last.
std::vector<Rat> gap_samples(std::vector<RootInterval> ivs) {
    std::sort(ivs.begin(), ivs.end(),
              [](const RootInterval& a, const RootInterval& b) { return a.lo < b.lo; });
    std::vector<Rat> out;
    if (ivs.empty()) {
        out.push_back(Rat(0));
        return out;
    }
    out.push_back(ivs.front().lo - 1);
    for (size_t i = 0; i + 1 < ivs.size(); ++i) {
        if (ivs[i].hi < ivs[i + 1].lo)
            out.push_back((ivs[i].hi + ivs[i + 1].lo) / 2);
    }
    out.push_back(ivs.back().hi + 1);
    return out;
}

// All critical x abscissae of the constraint arrangement, as isolating
// intervals that are pairwise disjoint (equal roots merged).
std::vector<RootInterval> critical_x(const std::vector<QuadFn>& cs) {
    std::vector<UniPoly> polys;
    auto push = [&](const UniPoly& p) {
        if (!p.is_zero() && p.degree() >= 1) polys.push_back(p.squarefree());
    };
    for (const auto& c : cs) {
        if (!c.qyy.is_zero()) {
            push(disc_y(c));
        } else if (!c.qxy.is_zero() || !c.qy.is_zero()) {
            push(UniPoly({c.qy, c.qxy}));  // leading coefficient in y
        } else {
            push(UniPoly({c.q0, c.qx, c.qxx}));  // pure-x constraint
        }
    }
    for (size_t i = 0; i < cs.size(); ++i) {
        bool yi = !cs[i].qyy.is_zero() || !cs[i].qxy.is_zero() || !cs[i].qy.is_zero();
        if (!yi) continue;
        for (size_t j = i + 1; j < cs.size(); ++j) {
            bool yj = !cs[j].qyy.is_zero() || !cs[j].qxy.is_zero() || !cs[j].qy.is_zero();
            if (!yj) continue;
            UniPoly r = resultant_y(cs[i], cs[j]);
            push(r);  // identically zero: shared (parallel) component, no crossing
        }
    }
    // Isolate roots per polynomial, then separate across polynomials.
    struct Tagged {
        UniPoly p;
        RootInterval iv;
    };
    std::vector<Tagged> roots;
    for (const auto& p : polys)
        for (const auto& iv : isolate_roots(p)) roots.push_back({p, iv});
    // Pairwise separation; merged duplicates dropped.
    std::vector<bool> dead(roots.size(), false);
    for (size_t i = 0; i < roots.size(); ++i) {
        if (dead[i]) continue;
        for (size_t j = i + 1; j < roots.size(); ++j) {
            if (dead[j]) continue;
            if (separate_or_merge(roots[i].p, roots[i].iv, roots[j].p, roots[j].iv))
                dead[j] = true;
        }
    }
    std::vector<RootInterval> out;
    for (size_t i = 0; i < roots.size(); ++i)
        if (!dead[i]) out.push_back(roots[i].iv);
    return out;
}

std::optional<Pt> scan_line(const std::vector<QuadFn>& cs, const Rat& x) {
    // Product of the restrictions to the line; a vanishing factor means some
    // constraint is identically zero there and no strict point exists.
    UniPoly prod = UniPoly::constant(Scalar(1));
    for (const auto& c : cs) {
        UniPoly slice = conic_at_x(c, x);
        if (slice.is_zero()) return std::nullopt;
        if (slice.degree() >= 1) prod = prod * slice;
    }
    std::vector<RootInterval> ivs;
    if (prod.degree() >= 1) ivs = isolate_roots(prod);
    Scalar sx{x};
    for (const Rat& y : gap_samples(std::move(ivs))) {
        Pt p{sx, Scalar(y)};
        if (all_strict(cs, p)) return p;
    }
    return std::nullopt;
}

}  // namespace

std::optional<Pt> find_strict_point(const std::vector<QuadFn>& constraints,
                                    const std::vector<Pt>& hints) {
    for (const auto& h : hints)
        if (all_strict(constraints, h)) return h;
    if (constraints.empty()) return Pt{Scalar(0), Scalar(0)};
    if (all_strict(constraints, Pt{Scalar(0), Scalar(0)})) return Pt{Scalar(0), Scalar(0)};

    for (const Rat& x : gap_samples(critical_x(constraints))) {
        if (auto p = scan_line(constraints, x)) return p;
    }
    return std::nullopt;
}

std::optional<Pt> interior_point(ParabolicRegion& r, const std::vector<Pt>& hints) {
    if (r.witness()) return r.witness();
    std::vector<QuadFn> cs;
    for (const auto& i : r.inequalities()) cs.push_back(i.fn());
    auto p = find_strict_point(cs, hints);
    if (p) r.set_witness(*p);
    return p;
}

std::optional<ParabolicRegion> intersect_regions(const ParabolicRegion& r1,
                                                 const ParabolicRegion& r2) {
    std::vector<ParabolicInequality> all = r1.inequalities();
    all.insert(all.end(), r2.inequalities().begin(), r2.inequalities().end());
    ParabolicRegion cand(std::move(all));
    std::vector<Pt> hints;
    if (r1.witness()) hints.push_back(*r1.witness());
    if (r2.witness()) hints.push_back(*r2.witness());
    if (r1.witness() && r2.witness()) {
        const Pt &a = *r1.witness(), &b = *r2.witness();
        hints.push_back({(a.x + b.x) / Scalar(2), (a.y + b.y) / Scalar(2)});
    }
    if (interior_point(cand, hints)) return cand;
    return std::nullopt;
}

std::optional<ParabolicRegion> merge_complementary(const ParabolicRegion& r1,
                                                   const ParabolicRegion& r2) {
    std::map<std::string, const ParabolicInequality*> k1, k2;
    for (const auto& i : r1.inequalities()) k1[i.key()] = &i;
    for (const auto& i : r2.inequalities()) k2[i.key()] = &i;
    std::vector<const ParabolicInequality*> only1, only2;
    std::vector<ParabolicInequality> common;
    for (const auto& [k, p] : k1) {
        if (k2.count(k))
            common.push_back(*p);
        else
            only1.push_back(p);
    }
    for (const auto& [k, p] : k2)
        if (!k1.count(k)) only2.push_back(p);
    if (only1.size() != 1 || only2.size() != 1) return std::nullopt;
    if (!(only1[0]->negated() == *only2[0])) return std::nullopt;
    ParabolicRegion merged(std::move(common));
    if (r1.witness() && merged.strictly_contains(*r1.witness()))
        merged.set_witness(*r1.witness());
    else if (r2.witness() && merged.strictly_contains(*r2.witness()))
        merged.set_witness(*r2.witness());
    return merged;
}

ParabolicRegion prune_redundant(const ParabolicRegion& r) {
    std::vector<ParabolicInequality> kept = r.inequalities();
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < kept.size(); ++i) {
            // Inequality i never cuts: remainder region with i flipped has
            // empty interior.
            std::vector<QuadFn> test;
            for (size_t j = 0; j < kept.size(); ++j)
                if (j != i) test.push_back(kept[j].fn());
            test.push_back(-kept[i].fn());
            if (!find_strict_point(test, {})) {
                kept.erase(kept.begin() + i);
                changed = true;
                break;
            }
        }
    }
    ParabolicRegion out(std::move(kept));
    if (r.witness()) out.set_witness(*r.witness());
    return out;
}

ParabolicRegion region_of_polytope(const Polytope& p) {
    std::vector<ParabolicInequality> ineqs;
    for (const auto& h : p.halfplanes()) ineqs.push_back(ParabolicInequality::from_linear(h));
    ParabolicRegion r(std::move(ineqs));
    if (p.dim() == 2) r.set_witness(p.centroid());
    return r;
}

}  // namespace plq
