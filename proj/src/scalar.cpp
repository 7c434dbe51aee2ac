#include "plq/scalar.hpp"

#include <cmath>
#include <sstream>

namespace plq {

Scalar::Scalar(long num, long den) : d_(0) {
    if (den == 0) throw DivisionByZero("Scalar: zero denominator");
    a_ = Rat(num, den);
    a_.canonicalize();
}

Scalar::Scalar(const Rat& a, const Rat& b, long d) : a_(a), b_(b), d_(d) {
    a_.canonicalize();
    b_.canonicalize();
    normalize();
}

void Scalar::normalize() {
    if (b_ == 0) d_ = 0;
    if (d_ == 0 && b_ != 0)
        throw InternalError("Scalar: root part without a field");
}

long Scalar::merge_fields(const Scalar& x, const Scalar& y) {
    if (x.d_ == 0) return y.d_;
    if (y.d_ == 0 || x.d_ == y.d_) return x.d_;
    throw UnsupportedField("Scalar: mixed extensions sqrt(" + std::to_string(x.d_) +
                           ") and sqrt(" + std::to_string(y.d_) + ")");
}

int Scalar::sign() const {
    int sa = sgn(a_);
    int sb = sgn(b_);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // a and b*sqrt(d) have opposite signs: compare a^2 against b^2*d.
    Rat lhs = a_ * a_;
    Rat rhs = b_ * b_ * Rat(d_);
    int c = cmp(lhs, rhs);
    if (c == 0) return 0;  // cannot happen for square-free d >= 2, kept for safety
    return c > 0 ? sa : sb;
}

Scalar Scalar::operator+(const Scalar& o) const {
    long d = merge_fields(*this, o);
    return Scalar(a_ + o.a_, b_ + o.b_, d);
}

Scalar Scalar::operator-(const Scalar& o) const {
    long d = merge_fields(*this, o);
    return Scalar(a_ - o.a_, b_ - o.b_, d);
}

Scalar Scalar::operator*(const Scalar& o) const {
    long d = merge_fields(*this, o);
    Rat a = a_ * o.a_;
    if (d != 0) a += b_ * o.b_ * Rat(d);
    Rat b = a_ * o.b_ + b_ * o.a_;
    return Scalar(a, b, d);
}

Scalar Scalar::operator/(const Scalar& o) const {
    if (o.is_zero()) throw DivisionByZero("Scalar: division by zero");
    long d = merge_fields(*this, o);
    if (o.b_ == 0) return Scalar(a_ / o.a_, b_ / o.a_, d);
    // Multiply by the conjugate; norm is nonzero since sqrt(d) is irrational.
    Rat norm = o.a_ * o.a_ - o.b_ * o.b_ * Rat(d);
    if (norm == 0) throw InternalError("Scalar: zero field norm (d not square-free?)");
    Rat a = (a_ * o.a_ - b_ * o.b_ * Rat(d)) / norm;
    Rat b = (b_ * o.a_ - a_ * o.b_) / norm;
    return Scalar(a, b, d);
}

double Scalar::to_double() const {
    double v = a_.get_d();
    if (b_ != 0) v += b_.get_d() * std::sqrt(static_cast<double>(d_));
    return v;
}

namespace {

std::string rat_str(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rat parse_rat(const std::string& s) {
    if (s.empty()) throw ParseError("empty rational literal");
    for (char c : s)
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '/'))
            throw ParseError("bad rational literal: " + s);
    try {
        Rat r(s);
        r.canonicalize();
        return r;
    } catch (const std::exception&) {
        throw ParseError("bad rational literal: " + s);
    }
}

}  // namespace

std::string Scalar::str() const {
    if (b_ == 0) return rat_str(a_);
    std::string out = rat_str(a_);
    out += (sgn(b_) < 0 ? "-" : "+");
    Rat ab = ::abs(b_);
    out += rat_str(ab) + "*sqrt(" + std::to_string(d_) + ")";
    return out;
}

Scalar Scalar::parse(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw ParseError("empty scalar");
    auto star = s.find("*sqrt(");
    if (star == std::string::npos) return Scalar(parse_rat(s));
    if (s.back() != ')') throw ParseError("bad scalar: " + text);
    std::string dstr = s.substr(star + 6, s.size() - star - 7);
    long d = 0;
    try {
        d = std::stol(dstr);
    } catch (const std::exception&) {
        throw ParseError("bad sqrt argument: " + text);
    }
    if (d < 0) throw ParseError("negative sqrt argument: " + text);
    // Split rational part and root coefficient at the last top-level +/-
    // before the coefficient (skip a leading sign).
    std::string head = s.substr(0, star);
    size_t split = std::string::npos;
    for (size_t i = head.size(); i-- > 1;) {
        if ((head[i] == '+' || head[i] == '-') && head[i - 1] != '/' && head[i - 1] != '+' &&
            head[i - 1] != '-') {
            split = i;
            break;
        }
    }
    Rat a = 0, b;
    if (split == std::string::npos) {
        b = parse_rat(head);
    } else {
        a = parse_rat(head.substr(0, split));
        std::string btail = head.substr(split + 1);
        b = parse_rat(btail);
        if (head[split] == '-') b = -b;
    }
    if (d == 0 || d == 1) {
        // sqrt(0) = 0, sqrt(1) = 1: fold into the rational part.
        return Scalar(d == 1 ? Rat(a + b) : a);
    }
    return Scalar(a, b, d);
}

std::optional<Scalar> Scalar::sqrt_in_field(const Scalar& x) {
    int sx = x.sign();
    if (sx < 0) return std::nullopt;
    if (sx == 0) return Scalar(0);
    auto rat_sqrt = [](const Rat& r) -> std::optional<Rat> {
        if (sgn(r) < 0) return std::nullopt;
        Int num = r.get_num(), den = r.get_den();
        if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
            return std::nullopt;
        Int rn, rd;
        mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
        mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
        Rat out(rn, rd);
        out.canonicalize();
        return out;
    };
    if (x.is_rational()) {
        // sqrt(a) rational, or k*sqrt(d) landing in some Q(sqrt(d)).
        if (auto r = rat_sqrt(x.a_)) return Scalar(*r);
        Int nd = x.a_.get_num() * x.a_.get_den();
        Int k, d;
        square_free_decompose(nd, k, d);
        if (!d.fits_slong_p()) return std::nullopt;
        Rat coeff(k, x.a_.get_den());
        coeff.canonicalize();
        return Scalar(Rat(0), coeff, d.get_si());
    }
    // (alpha + beta*sqrt(d))^2 = a + b*sqrt(d):
    //   alpha^2 + beta^2 d = a, 2 alpha beta = b.
    // alpha^2 solves t^2 - a t + b^2 d / 4 = 0.
    Rat a = x.a_, b = x.b_;
    Rat disc = a * a - b * b * Rat(x.d_);
    auto root = rat_sqrt(disc);
    if (!root) return std::nullopt;
    for (int pick = 0; pick < 2; ++pick) {
        Rat alpha2 = (pick == 0) ? Rat((a + *root) / 2) : Rat((a - *root) / 2);
        auto alpha = rat_sqrt(alpha2);
        if (!alpha || *alpha == 0) continue;
        Rat beta = b / (2 * *alpha);
        Scalar cand(*alpha, beta, x.d_);
        if (cand.sign() > 0 && cand * cand == x) return cand;
        cand = -cand;
        if (cand.sign() > 0 && cand * cand == x) return cand;
    }
    return std::nullopt;
}

void Scalar::bounds(Rat& lo, Rat& hi, const Rat& width) const {
    if (b_ == 0) {
        lo = hi = a_;
        return;
    }
    Rat slo, shi;
    Rat eps = width / (2 * ::abs(b_));
    sqrt_bounds(Int(d_), slo, shi, eps);
    if (sgn(b_) > 0) {
        lo = a_ + b_ * slo;
        hi = a_ + b_ * shi;
    } else {
        lo = a_ + b_ * shi;
        hi = a_ + b_ * slo;
    }
}

void square_free_decompose(const Int& n, Int& k, Int& d) {
    if (n == 0) {
        k = 0;
        d = 1;
        return;
    }
    Int m = ::abs(n);
    k = 1;
    d = 1;
    Int p = 2;
    Int rem = m;
    while (p * p <= rem && p < 2000000) {
        if (rem % p == 0) {
            int e = 0;
            while (rem % p == 0) {
                rem /= p;
                ++e;
            }
            for (int i = 0; i < e / 2; ++i) k *= p;
            if (e % 2) d *= p;
        }
        p += (p == 2) ? 1 : 2;
    }
    // Remaining cofactor: either a perfect square or taken square-free.
    if (rem > 1) {
        if (mpz_perfect_square_p(rem.get_mpz_t())) {
            Int r;
            mpz_sqrt(r.get_mpz_t(), rem.get_mpz_t());
            k *= r;
        } else {
            d *= rem;
        }
    }
    if (n < 0) d = -d;
}

void sqrt_bounds(const Int& n, Rat& lo, Rat& hi, const Rat& eps) {
    if (n < 0) throw InternalError("sqrt_bounds: negative argument");
    if (n == 0) {
        lo = hi = 0;
        return;
    }
    // Integer floor sqrt as a seed, then bisect.
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    lo = Rat(r);
    hi = Rat(r + 1);
    Rat target(n);
    while (hi - lo > eps) {
        Rat mid = (lo + hi) / 2;
        if (mid * mid <= target)
            lo = mid;
        else
            hi = mid;
    }
}

}  // namespace plq
