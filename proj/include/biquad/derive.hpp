#pragma once

// From a curve point to an exact solution of A^4 + h*B^4 = C^4 + h*D^4.
//
// The chain is
//     (X, Y)  ->  p = X/k, m = Y/k, q = h*p - 1        (k = h^3 - h)
//             ->  A = m - q, B = m + p, C = m + q, D = m - p
//             ->  primitive positive integers via the common denominator.
//
// A point with Y = 0 forces m = 0 and is rejected; so are quadruples with a
// zero component.  Every produced quadruple is re-verified exactly before it
// is returned, never sampled.

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "biquad/curve.hpp"
#include "biquad/numeric.hpp"

namespace biquad {

struct PmqTriple {
    Rational h;
    Rational p, m, q;
};

// Inverse of the X = k*p, Y = k*m substitution, with q pinned by the
// normalization h*p - q = 1.
inline PmqTriple point_to_pmq(const Curve& curve, const Point& pt) {
    if (pt.is_infinity()) throw DegeneratePoint("point at infinity has no (p, m, q)");
    detail::require_member(curve, pt, "point_to_pmq");
    if (pt.y().is_zero()) throw DegeneratePoint("2-torsion point (Y=0) forces m=0");
    PmqTriple t;
    t.h = curve.h();
    t.p = pt.x() / curve.k();
    t.m = pt.y() / curve.k();
    t.q = curve.h() * t.p - Rational(1);
    // m^2 = k*p^3 - 3h^2*p^2 + 3h*p - 1 is the curve equation in (p, m); it
    // must balance exactly or the transform above is wrong.
    const Rational rhs = curve.k() * pow(t.p, 3) - Rational(3) * t.h * t.h * t.p * t.p +
                         Rational(3) * t.h * t.p - Rational(1);
    if (t.m * t.m != rhs) throw Error("point_to_pmq: (p, m, q) consistency check failed");
    return t;
}

// Raw signed rational quadruple plus its primitive positive integer form.
struct Quadruple {
    Rational h;
    std::array<Rational, 4> raw;   // signed A, B, C, D
    std::array<BigInt, 4> integral;  // |A|, |B|, |C|, |D| scaled to gcd 1

    const BigInt& a() const { return integral[0]; }
    const BigInt& b() const { return integral[1]; }
    const BigInt& c() const { return integral[2]; }
    const BigInt& d() const { return integral[3]; }

    // {|A|, |B|} vs {|C|, |D|} with weights respected: positionally for a
    // general h, as plain multisets when both weights coincide (h = 1).
    bool trivial() const {
        if (integral[0] == integral[2] && integral[1] == integral[3]) return true;
        if (h == Rational(1))
            return integral[0] == integral[3] && integral[1] == integral[2];
        return false;
    }

    std::string str() const {
        return "(" + integral[0].str() + "," + integral[1].str() + "," + integral[2].str() + "," +
               integral[3].str() + ")";
    }
};

namespace detail {

inline std::array<BigInt, 4> clear_to_primitive(const std::array<Rational, 4>& raw) {
    const std::vector<Rational> values(raw.begin(), raw.end());
    const BigInt scale = lcm_of_denominators(values);
    std::array<BigInt, 4> ints;
    for (std::size_t i = 0; i < 4; ++i)
        ints[i] = boost::multiprecision::abs(raw[i].num() * (scale / raw[i].den()));
    const BigInt g = gcd_of(ints);
    for (auto& v : ints) v /= g;
    return ints;
}

inline void verify_quadruple(const Quadruple& q) {
    const Rational& h = q.h;
    if (q.raw[0] + q.raw[2] != q.raw[1] + q.raw[3])
        throw Error("quadruple: A + C = B + D violated");
    if (pow4(q.raw[0]) + h * pow4(q.raw[1]) != pow4(q.raw[2]) + h * pow4(q.raw[3]))
        throw Error("quadruple: raw identity violated");
    const Rational ia(q.integral[0]), ib(q.integral[1]), ic(q.integral[2]), id(q.integral[3]);
    if (pow4(ia) + h * pow4(ib) != pow4(ic) + h * pow4(id))
        throw Error("quadruple: integral identity violated");
}

}  // namespace detail

inline Quadruple pmq_to_quadruple(const PmqTriple& t) {
    Quadruple q;
    q.h = t.h;
    q.raw = {t.m - t.q, t.m + t.p, t.m + t.q, t.m - t.p};
    for (const Rational& v : q.raw)
        if (v.is_zero())
            throw TrivialQuadruple("zero component in quadruple from (p,m,q)=(" + t.p.str() +
                                   "," + t.m.str() + "," + t.q.str() + ")");
    q.integral = detail::clear_to_primitive(q.raw);
    detail::verify_quadruple(q);
    return q;
}

inline Quadruple quadruple_from_point(const Curve& curve, const Point& pt) {
    return pmq_to_quadruple(point_to_pmq(curve, pt));
}

// ---------------------------------------------------------------------------
// The h*t^4 scale trick: a solution for h*t^4 becomes a solution for h with
// B and D stretched by t.

struct ScalePlan {
    Rational t;
    Rational target_h;
    Rational effective_h;

    ScalePlan(Rational target, Rational scale)
        : t(std::move(scale)), target_h(std::move(target)) {
        if (t.is_zero()) throw DomainError("scale t must be nonzero");
        effective_h = target_h * pow4(t);
    }
};

inline Quadruple rescale(const Quadruple& solved, const ScalePlan& plan) {
    if (solved.h != plan.effective_h)
        throw DomainError("rescale: quadruple solves h=" + solved.h.str() +
                          ", plan expects h=" + plan.effective_h.str());
    Quadruple q;
    q.h = plan.target_h;
    q.raw = {solved.raw[0], plan.t * solved.raw[1], solved.raw[2], plan.t * solved.raw[3]};
    q.integral = detail::clear_to_primitive(q.raw);
    detail::verify_quadruple(q);
    return q;
}

// Deterministic small-height scale sequence: 1, 2, 1/2, 3, 1/3, 3/2, 2/3, ...
inline std::vector<Rational> scale_sequence(std::size_t count) {
    std::vector<Rational> out;
    for (BigInt height = 1; out.size() < count; ++height) {
        for (BigInt q = 1; q < height && out.size() < count; ++q) {
            if (boost::multiprecision::gcd(height, q) != 1) continue;
            out.emplace_back(height, q);
            if (out.size() < count) out.emplace_back(q, height);
        }
        if (height == 1) out.emplace_back(1);
    }
    return out;
}

// Supplies a usable point for a curve, or nothing.
using PointSource = std::function<std::optional<Point>(const Curve&)>;

// Solve A^4 + h*B^4 = C^4 + h*D^4 through the curve for h*t^4.
inline Quadruple solve_with_scaling(const Rational& h, const Rational& t,
                                    const PointSource& source) {
    const ScalePlan plan(h, t);
    const Curve curve(plan.effective_h);  // throws DegenerateParameter when unusable
    const std::optional<Point> pt = source(curve);
    if (!pt)
        throw SearchExhausted("no point available on the curve for h=" +
                              plan.effective_h.str());
    return rescale(quadruple_from_point(curve, *pt), plan);
}

// ---------------------------------------------------------------------------
// Weighted reading u*A^4 + v*B^4 = u*C^4 + v*D^4 of a quadruple for h = v/u.

struct WeightedQuadruple {
    BigInt u, v;
    std::array<BigInt, 4> terms;  // A, B, C, D

    std::string str() const {
        auto weighted = [](const BigInt& w, const BigInt& base) {
            return (w == 1 ? "" : w.str() + "*") + base.str() + "^4";
        };
        return weighted(u, terms[0]) + "+" + weighted(v, terms[1]) + "=" +
               weighted(u, terms[2]) + "+" + weighted(v, terms[3]);
    }
};

inline WeightedQuadruple as_weighted(const Quadruple& q, const BigInt& u, const BigInt& v) {
    if (u.is_zero()) throw DomainError("as_weighted: u must be nonzero");
    if (q.h != Rational(v, u))
        throw DomainError("as_weighted: quadruple solves h=" + q.h.str() + ", not " + v.str() +
                          "/" + u.str());
    WeightedQuadruple w{u, v, q.integral};
    if (u * pow4(w.terms[0]) + v * pow4(w.terms[1]) !=
        u * pow4(w.terms[2]) + v * pow4(w.terms[3]))
        throw Error("as_weighted: weighted identity failed to verify");
    return w;
}

}  // namespace biquad
