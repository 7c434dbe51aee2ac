#pragma once

/**
 * @file polynomial.hpp
 * @brief Univariate polynomials over Q(sqrt(D)) with exact Sturm root
 *        isolation, plus resultants of conics used by the region machinery.
 */

#include <vector>

#include "plq/functions.hpp"

namespace plq {

struct UniPoly {
    std::vector<Scalar> c;  // c[i] * t^i, trailing zeros stripped

    UniPoly() = default;
    explicit UniPoly(std::vector<Scalar> coeffs) : c(std::move(coeffs)) { trim(); }
    static UniPoly constant(const Scalar& s) { return UniPoly({s}); }

    void trim();
    int degree() const { return static_cast<int>(c.size()) - 1; }  // -1 for zero poly
    bool is_zero() const { return c.empty(); }
    const Scalar& lead() const { return c.back(); }

    Scalar eval(const Scalar& t) const;
    UniPoly derivative() const;

    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator*(const UniPoly& o) const;
    UniPoly scaled(const Scalar& t) const;

    // Field division: *this = q * d + r with deg r < deg d.
    static void divrem(const UniPoly& a, const UniPoly& d, UniPoly& q, UniPoly& r);
    static UniPoly gcd(UniPoly a, UniPoly b);  // monic gcd
    UniPoly squarefree() const;                // p / gcd(p, p')
};

// Isolating interval for one real root; exact means lo == hi is the root.
struct RootInterval {
    Rat lo, hi;
    bool exact = false;
};

// Disjoint isolating intervals for all distinct real roots, left to right.
std::vector<RootInterval> isolate_roots(const UniPoly& p);

// Halve the interval width while keeping the root inside.
void refine_root(const UniPoly& p, RootInterval& iv);

// Separate two isolating intervals of (possibly different) square-free
// polynomials: afterwards they are disjoint or flagged as the same root.
// Returns true when the roots are equal.
bool separate_or_merge(const UniPoly& p, RootInterval& a, const UniPoly& q, RootInterval& b);

// A conic C(x, y) viewed as a polynomial in y: C = A2(x) y^2 + A1(x) y + A0(x).
void conic_y_coeffs(const QuadFn& c, UniPoly& a2, UniPoly& a1, UniPoly& a0);

// Restriction of a conic to the vertical line x = t: quadratic in y.
UniPoly conic_at_x(const QuadFn& c, const Rat& t);

// Resultant in y of two conics (zero when they share a component).
UniPoly resultant_y(const QuadFn& p, const QuadFn& q);

// Discriminant of a conic w.r.t. y: A1^2 - 4 A2 A0 (in x).
UniPoly disc_y(const QuadFn& c);

}  // namespace plq
