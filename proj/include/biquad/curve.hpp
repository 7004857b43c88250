#pragma once

// The cubic model Y^2 = X^3 + a2*X^2 + a4*X + a6 attached to a rational
// parameter h:
//
//     a2 = -3h^2,   a4 = 3h(h^3 - h),   a6 = -(h^3 - h)^2
//
// together with the exact chord/tangent group law on its rational points.
// The model is kept in this non-reduced form on purpose so coefficients and
// point coordinates can be compared literally against published values.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "biquad/numeric.hpp"

namespace biquad {

class Point;

class Curve {
  public:
    // h must avoid {0, 1, -1}; those collapse k = h^3 - h and make the cubic
    // singular.  The discriminant is checked as well.
    explicit Curve(Rational h) : h_(std::move(h)) {
        if (h_.is_zero() || h_ == Rational(1) || h_ == Rational(-1))
            throw DegenerateParameter("curve parameter h must avoid {0, 1, -1}, got h=" + h_.str());
        k_ = pow(h_, 3) - h_;
        a2_ = Rational(-3) * h_ * h_;
        a4_ = Rational(3) * h_ * k_;
        a6_ = -(k_ * k_);
        // Discriminant of x^3 + a*x^2 + b*x + c.
        const Rational &a = a2_, &b = a4_, &c = a6_;
        const Rational disc = Rational(18) * a * b * c - Rational(4) * pow(a, 3) * c +
                              a * a * b * b - Rational(4) * pow(b, 3) - Rational(27) * c * c;
        if (disc.is_zero())
            throw DegenerateParameter("singular cubic for h=" + h_.str());
    }

    const Rational& h() const { return h_; }
    const Rational& k() const { return k_; }  // h^3 - h
    const Rational& a2() const { return a2_; }
    const Rational& a4() const { return a4_; }
    const Rational& a6() const { return a6_; }

    Rational rhs(const Rational& x) const {
        return ((x + a2_) * x + a4_) * x + a6_;
    }

    bool contains(const Point& p) const;

    std::string equation() const {
        return "Y^2=X^3+(" + a2_.str() + ")X^2+(" + a4_.str() + ")X+(" + a6_.str() + ")";
    }

    friend bool operator==(const Curve& a, const Curve& b) { return a.h_ == b.h_; }

  private:
    Rational h_, k_, a2_, a4_, a6_;
};

// Affine rational point or the point at infinity (group identity).
class Point {
  public:
    static Point infinity() { return Point(); }

    Point(Rational x, Rational y) : finite_(true), x_(std::move(x)), y_(std::move(y)) {}

    bool is_infinity() const { return !finite_; }
    const Rational& x() const {
        if (!finite_) throw DomainError("coordinate access on the point at infinity");
        return x_;
    }
    const Rational& y() const {
        if (!finite_) throw DomainError("coordinate access on the point at infinity");
        return y_;
    }

    std::string str() const {
        return finite_ ? "(" + x_.str() + "," + y_.str() + ")" : "infinity";
    }

    friend bool operator==(const Point& a, const Point& b) {
        if (a.finite_ != b.finite_) return false;
        if (!a.finite_) return true;
        return a.x_ == b.x_ && a.y_ == b.y_;
    }

  private:
    Point() : finite_(false) {}
    bool finite_;
    Rational x_, y_;
};

inline bool Curve::contains(const Point& p) const {
    if (p.is_infinity()) return true;
    return p.y() * p.y() == rhs(p.x());
}

namespace detail {
inline void require_member(const Curve& c, const Point& p, const char* op) {
    if (!c.contains(p))
        throw DomainError(std::string(op) + ": point " + p.str() + " is not on the curve for h=" + c.h().str());
}
}  // namespace detail

inline Point negate(const Curve& c, const Point& p) {
    detail::require_member(c, p, "negate");
    if (p.is_infinity()) return p;
    return Point(p.x(), -p.y());
}

// Chord/tangent addition.  Exact over the rationals; infinity is the
// identity and P + (-P) = infinity.
inline Point add(const Curve& c, const Point& p, const Point& q) {
    detail::require_member(c, p, "add");
    detail::require_member(c, q, "add");
    if (p.is_infinity()) return q;
    if (q.is_infinity()) return p;
    const Rational &x1 = p.x(), &y1 = p.y(), &x2 = q.x(), &y2 = q.y();
    Rational lambda;
    if (x1 == x2) {
        if (y1 == -y2) return Point::infinity();  // includes the Y = 0 tangent case
        lambda = (Rational(3) * x1 * x1 + Rational(2) * c.a2() * x1 + c.a4()) / (Rational(2) * y1);
    } else {
        lambda = (y2 - y1) / (x2 - x1);
    }
    Rational x3 = lambda * lambda - c.a2() - x1 - x2;
    Rational y3 = lambda * (x1 - x3) - y1;
    return Point(std::move(x3), std::move(y3));
}

// Double-and-add; n may be any signed integer, 0*P = infinity.
inline Point scalar_mul(const Curve& c, const BigInt& n, const Point& p) {
    detail::require_member(c, p, "scalar_mul");
    if (n < 0) return negate(c, scalar_mul(c, -n, p));
    Point acc = Point::infinity();
    Point base = p;
    BigInt e = n;
    while (!e.is_zero()) {
        if ((e & 1) != 0) acc = add(c, acc, base);
        e >>= 1;
        if (!e.is_zero()) base = add(c, base, base);
    }
    return acc;
}

inline Point scalar_mul(const Curve& c, long long n, const Point& p) {
    return scalar_mul(c, BigInt(n), p);
}

// ---------------------------------------------------------------------------
// Canonical (r, s, t) representation: X = r/s^2, Y = t/s^3 with s > 0 minimal.
// On an integral model the denominators of a rational point are exactly a
// square and matching cube; for our (possibly non-integral) models the
// minimal s is assembled prime by prime from the two denominators.

struct CanonicalRep {
    BigInt r;
    BigInt s;
    BigInt t;
};

namespace detail {

struct Factorization {
    std::vector<std::pair<BigInt, unsigned>> factors;
    BigInt leftover;  // 1 unless a factor above the trial-division limit remains
};

inline Factorization factor_by_trial(BigInt n, unsigned long limit = 1000000) {
    Factorization out;
    out.leftover = 1;
    if (n < 0) n = -n;
    auto strip = [&](const BigInt& p) {
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e) out.factors.emplace_back(p, e);
    };
    strip(2);
    for (BigInt p = 3; p * p <= n && p <= limit; p += 2) strip(p);
    if (n > 1) {
        // Either prime, or a composite of primes beyond the limit.
        if (n <= BigInt(limit) * BigInt(limit))
            out.factors.emplace_back(n, 1);
        else
            out.leftover = n;
    }
    return out;
}

}  // namespace detail

inline CanonicalRep canonical_rep(const Point& p) {
    if (p.is_infinity()) throw DomainError("canonical_rep of the point at infinity");
    const BigInt& dx = p.x().den();
    const BigInt& dy = p.y().den();

    auto fx = detail::factor_by_trial(dx);
    auto fy = detail::factor_by_trial(dy);

    BigInt s = 1;
    auto exponent_of = [](const detail::Factorization& f, const BigInt& prime) -> unsigned {
        for (const auto& [p_, e] : f.factors)
            if (p_ == prime) return e;
        return 0;
    };
    for (const auto& [prime, ex] : fx.factors) {
        const unsigned ey = exponent_of(fy, prime);
        const unsigned need = std::max((ex + 1) / 2, (ey + 2) / 3);
        for (unsigned i = 0; i < need; ++i) s *= prime;
    }
    for (const auto& [prime, ey] : fy.factors) {
        if (exponent_of(fx, prime) != 0) continue;  // handled above
        const unsigned need = (ey + 2) / 3;
        for (unsigned i = 0; i < need; ++i) s *= prime;
    }
    // Oversized but safe fallback for denominators with untouched large factors.
    if (fx.leftover != 1 || fy.leftover != 1)
        s *= boost::multiprecision::lcm(fx.leftover, fy.leftover);

    const BigInt s2 = s * s;
    const BigInt s3 = s2 * s;
    if (s2 % dx != 0 || s3 % dy != 0) throw Error("canonical_rep: internal scale mismatch");
    return CanonicalRep{p.x().num() * (s2 / dx), s, p.y().num() * (s3 / dy)};
}

}  // namespace biquad
