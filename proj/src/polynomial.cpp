#include "plq/polynomial.hpp"

#include <algorithm>

namespace plq {

void UniPoly::trim() {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
}

Scalar UniPoly::eval(const Scalar& t) const {
    Scalar v(0);
    for (size_t i = c.size(); i-- > 0;) v = v * t + c[i];
    return v;
}

UniPoly UniPoly::derivative() const {
    std::vector<Scalar> d;
    for (size_t i = 1; i < c.size(); ++i) d.push_back(Scalar(static_cast<long>(i)) * c[i]);
    return UniPoly(std::move(d));
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    std::vector<Scalar> r(std::max(c.size(), o.c.size()), Scalar(0));
    for (size_t i = 0; i < c.size(); ++i) r[i] = r[i] + c[i];
    for (size_t i = 0; i < o.c.size(); ++i) r[i] = r[i] + o.c[i];
    return UniPoly(std::move(r));
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + o.scaled(Scalar(-1)); }

UniPoly UniPoly::operator*(const UniPoly& o) const {
    if (is_zero() || o.is_zero()) return UniPoly();
    std::vector<Scalar> r(c.size() + o.c.size() - 1, Scalar(0));
    for (size_t i = 0; i < c.size(); ++i)
        for (size_t j = 0; j < o.c.size(); ++j) r[i + j] = r[i + j] + c[i] * o.c[j];
    return UniPoly(std::move(r));
}

UniPoly UniPoly::scaled(const Scalar& t) const {
    std::vector<Scalar> r = c;
    for (auto& x : r) x = x * t;
    return UniPoly(std::move(r));
}

void UniPoly::divrem(const UniPoly& a, const UniPoly& d, UniPoly& q, UniPoly& r) {
    if (d.is_zero()) throw DivisionByZero("UniPoly: division by zero polynomial");
    r = a;
    q = UniPoly();
    q.c.assign(a.c.size(), Scalar(0));
    while (!r.is_zero() && r.degree() >= d.degree()) {
        int k = r.degree() - d.degree();
        Scalar f = r.lead() / d.lead();
        q.c.resize(std::max<size_t>(q.c.size(), k + 1), Scalar(0));
        q.c[k] = q.c[k] + f;
        for (size_t i = 0; i < d.c.size(); ++i) r.c[i + k] = r.c[i + k] - f * d.c[i];
        r.trim();
    }
    q.trim();
}

UniPoly UniPoly::gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        UniPoly q, r;
        divrem(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero()) a = a.scaled(Scalar(1) / a.lead());
    return a;
}

UniPoly UniPoly::squarefree() const {
    if (degree() <= 1) return *this;
    UniPoly g = gcd(*this, derivative());
    if (g.degree() <= 0) return *this;
    UniPoly q, r;
    divrem(*this, g, q, r);
    return q;
}

namespace {

std::vector<UniPoly> sturm_chain(const UniPoly& p) {
    std::vector<UniPoly> chain;
    chain.push_back(p);
    chain.push_back(p.derivative());
    while (!chain.back().is_zero()) {
        UniPoly q, r;
        UniPoly::divrem(chain[chain.size() - 2], chain.back(), q, r);
        chain.push_back(r.scaled(Scalar(-1)));
    }
    chain.pop_back();
    return chain;
}

int sign_changes(const std::vector<UniPoly>& chain, const Rat& t) {
    int changes = 0, prev = 0;
    Scalar st{t};
    for (const auto& p : chain) {
        int s = p.eval(st).sign();
        if (s != 0) {
            if (prev != 0 && s != prev) ++changes;
            prev = s;
        }
    }
    return changes;
}

// Number of distinct roots in (a, b] for a square-free chain.
int roots_between(const std::vector<UniPoly>& chain, const Rat& a, const Rat& b) {
    return sign_changes(chain, a) - sign_changes(chain, b);
}

// Strict upper bound on |roots|, rational.
Rat cauchy_bound(const UniPoly& p) {
    Rat m(0);
    Rat lead_lo, lead_hi;
    abs(p.lead()).bounds(lead_lo, lead_hi, Rat(1, 1024));
    if (lead_lo <= 0) lead_lo = lead_hi / 2;  // defensive; lead is nonzero
    for (size_t i = 0; i + 1 < p.c.size(); ++i) {
        Rat lo, hi;
        abs(p.c[i]).bounds(lo, hi, Rat(1, 1024));
        Rat q = hi / lead_lo;
        if (q > m) m = q;
    }
    return m + 1;
}

}  // namespace

std::vector<RootInterval> isolate_roots(const UniPoly& poly) {
    std::vector<RootInterval> out;
    if (poly.is_zero()) throw InternalError("isolate_roots: zero polynomial");
    UniPoly p = poly.squarefree();
    if (p.degree() <= 0) return out;
    auto chain = sturm_chain(p);
    Rat bound = cauchy_bound(p);

    struct Seg {
        Rat a, b;
        int count;
    };
    std::vector<Seg> work;
    int total = roots_between(chain, -bound, bound);
    if (total > 0) work.push_back({-bound, bound, total});
    while (!work.empty()) {
        Seg s = work.back();
        work.pop_back();
        if (s.count == 1) {
            // Shrink a little so the interval is tight-ish before reporting.
            out.push_back({s.a, s.b, false});
            continue;
        }
        // Find a midpoint that is not a root (finitely many roots).
        Rat mid = (s.a + s.b) / 2;
        Rat step = (s.b - s.a) / 64;
        while (p.eval(Scalar(mid)).sign() == 0) mid += step;
        int left = roots_between(chain, s.a, mid);
        if (left > 0) work.push_back({s.a, mid, left});
        if (s.count - left > 0) work.push_back({mid, s.b, s.count - left});
    }

    // Mark rational roots exactly when an endpoint happens to be one, and
    // normalize: interval (a, b] contains the root; make sure p(a) != 0.
    for (auto& iv : out) {
        Scalar vb = p.eval(Scalar(iv.hi));
        if (vb.sign() == 0) {
            iv.lo = iv.hi;
            iv.exact = true;
        }
    }
    std::sort(out.begin(), out.end(),
              [](const RootInterval& x, const RootInterval& y) { return x.lo < y.lo; });

    // Refine until pairwise strictly disjoint (no shared endpoints); gap
    // midpoints must land strictly between the actual roots.
    UniPoly psf = p;
    bool overlap = true;
    int guard = 0;
    while (overlap && guard++ < 512) {
        overlap = false;
        for (size_t i = 0; i + 1 < out.size(); ++i) {
            if (out[i].hi >= out[i + 1].lo) {
                refine_root(psf, out[i]);
                refine_root(psf, out[i + 1]);
                overlap = true;
            }
        }
        if (overlap)
            std::sort(out.begin(), out.end(),
                      [](const RootInterval& x, const RootInterval& y) { return x.lo < y.lo; });
    }
    if (guard >= 512) throw InternalError("isolate_roots: failed to separate intervals");
    return out;
}

void refine_root(const UniPoly& p, RootInterval& iv) {
    if (iv.exact) return;
    Rat mid = (iv.lo + iv.hi) / 2;
    Scalar vm = p.eval(Scalar(mid));
    if (vm.sign() == 0) {
        iv.lo = iv.hi = mid;
        iv.exact = true;
        return;
    }
    // Root is in (lo, hi]; p(lo) may be zero only if lo is itself a root of a
    // different factor, so use the sign change against hi.
    Scalar vh = p.eval(Scalar(iv.hi));
    int sh = vh.sign();
    if (sh == 0) {
        iv.lo = iv.hi;
        iv.exact = true;
        return;
    }
    if (vm.sign() == sh)
        iv.hi = mid;
    else
        iv.lo = mid;
}

bool separate_or_merge(const UniPoly& p, RootInterval& a, const UniPoly& q, RootInterval& b) {
    auto disjoint = [](const RootInterval& u, const RootInterval& v) {
        return u.hi < v.lo || v.hi < u.lo;
    };
    if (disjoint(a, b)) return false;
    if (a.exact && b.exact) return a.lo == b.lo;
    UniPoly g = UniPoly::gcd(p.squarefree(), q.squarefree());
    std::vector<UniPoly> gchain;
    if (g.degree() >= 1) gchain = sturm_chain(g);
    for (int iter = 0; iter < 512; ++iter) {
        if (disjoint(a, b)) return false;
        if (g.degree() >= 1) {
            // Common root inside the overlap means a and b isolate the same
            // algebraic number (each interval holds exactly one root).
            Rat lo = std::max(a.lo, b.lo), hi = std::min(a.hi, b.hi);
            if (g.eval(Scalar(lo)).sign() == 0 || roots_between(gchain, lo, hi) > 0) return true;
        }
        refine_root(p, a);
        refine_root(q, b);
        if (a.exact && b.exact) return a.lo == b.lo;
    }
    throw InternalError("separate_or_merge: failed to separate roots");
}

void conic_y_coeffs(const QuadFn& c, UniPoly& a2, UniPoly& a1, UniPoly& a0) {
    a2 = UniPoly({c.qyy});
    a1 = UniPoly({c.qy, c.qxy});
    a0 = UniPoly({c.q0, c.qx, c.qxx});
}

UniPoly conic_at_x(const QuadFn& c, const Rat& t) {
    Scalar x{t};
    return UniPoly({c.qxx * x * x + c.qx * x + c.q0, c.qxy * x + c.qy, c.qyy});
}

namespace {

// Determinant of a small square matrix of polynomials (cofactor expansion).
UniPoly poly_det(std::vector<std::vector<UniPoly>>& m) {
    size_t n = m.size();
    if (n == 1) return m[0][0];
    UniPoly det;
    for (size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        std::vector<std::vector<UniPoly>> minor;
        for (size_t i = 1; i < n; ++i) {
            std::vector<UniPoly> row;
            for (size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            minor.push_back(std::move(row));
        }
        UniPoly term = m[0][j] * poly_det(minor);
        det = (j % 2 == 0) ? det + term : det - term;
    }
    return det;
}

}  // namespace

UniPoly resultant_y(const QuadFn& p, const QuadFn& q) {
    UniPoly a2, a1, a0, b2, b1, b0;
    conic_y_coeffs(p, a2, a1, a0);
    conic_y_coeffs(q, b2, b1, b0);
    std::vector<UniPoly> pa = {a0, a1, a2}, pb = {b0, b1, b2};
    while (!pa.empty() && pa.back().is_zero()) pa.pop_back();
    while (!pb.empty() && pb.back().is_zero()) pb.pop_back();
    int dp = static_cast<int>(pa.size()) - 1, dq = static_cast<int>(pb.size()) - 1;
    if (dp <= 0 || dq <= 0)
        throw InternalError("resultant_y: a curve has no y dependence");
    // Sylvester matrix, size dp + dq.
    size_t n = dp + dq;
    std::vector<std::vector<UniPoly>> m(n, std::vector<UniPoly>(n, UniPoly()));
    for (int r = 0; r < dq; ++r)
        for (int k = 0; k <= dp; ++k) m[r][r + k] = pa[dp - k];
    for (int r = 0; r < dp; ++r)
        for (int k = 0; k <= dq; ++k) m[dq + r][r + k] = pb[dq - k];
    return poly_det(m);
}

UniPoly disc_y(const QuadFn& c) {
    UniPoly a2, a1, a0;
    conic_y_coeffs(c, a2, a1, a0);
    return a1 * a1 - a2 * a0.scaled(Scalar(4));
}

}  // namespace plq
