#pragma once

/**
 * @file scalar.hpp
 * @brief Exact scalars in Q(sqrt(D)).
 *
 * A Scalar is a + b*sqrt(d) with a, b arbitrary-precision rationals and d a
 * fixed nonnegative square-free integer. d == 0 means plain rational (b == 0).
 * All arithmetic is closed and exact; equality and sign are decidable.
 */

#include <gmpxx.h>

#include <optional>
#include <string>

#include "plq/errors.hpp"

namespace plq {

using Int = mpz_class;
using Rat = mpq_class;

class Scalar {
  public:
    Scalar() : d_(0) {}
    Scalar(int v) : a_(v), d_(0) {}
    Scalar(long v) : a_(static_cast<long>(v)), d_(0) {}
    Scalar(const Rat& a) : a_(a), d_(0) { a_.canonicalize(); }
    Scalar(long num, long den);
    Scalar(const Rat& a, const Rat& b, long d);

    const Rat& rat_part() const { return a_; }
    const Rat& root_part() const { return b_; }
    long field_d() const { return d_; }

    bool is_rational() const { return d_ == 0; }
    bool is_zero() const { return a_ == 0 && b_ == 0; }

    // Exact sign: -1, 0, +1.
    int sign() const;

    Scalar operator-() const { return Scalar(-a_, -b_, d_); }
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    bool operator==(const Scalar& o) const { return (*this - o).is_zero(); }
    bool operator!=(const Scalar& o) const { return !(*this == o); }
    bool operator<(const Scalar& o) const { return (*this - o).sign() < 0; }
    bool operator<=(const Scalar& o) const { return (*this - o).sign() <= 0; }
    bool operator>(const Scalar& o) const { return (*this - o).sign() > 0; }
    bool operator>=(const Scalar& o) const { return (*this - o).sign() >= 0; }

    double to_double() const;

    // Canonical textual form: "p/q" or "p/q+r/s*sqrt(D)" (lowest terms,
    // "/1" omitted, '-' instead of "+-").
    std::string str() const;
    static Scalar parse(const std::string& text);

    // Exact square root inside the same field, if one exists.
    static std::optional<Scalar> sqrt_in_field(const Scalar& x);

    // Rational bounds lo <= *this <= hi with hi - lo <= width.
    void bounds(Rat& lo, Rat& hi, const Rat& width) const;

  private:
    static long merge_fields(const Scalar& x, const Scalar& y);
    void normalize();

    Rat a_;   // rational part
    Rat b_;   // coefficient of sqrt(d_)
    long d_;  // 0 for plain rationals, else square-free >= 2
};

inline Scalar abs(const Scalar& x) { return x.sign() < 0 ? -x : x; }

// n = k^2 * d with d square-free (trial division; n small in practice).
void square_free_decompose(const Int& n, Int& k, Int& d);

// Rational enclosure of sqrt(n) for integer n >= 0, width <= eps.
void sqrt_bounds(const Int& n, Rat& lo, Rat& hi, const Rat& eps);

}  // namespace plq
