#pragma once

// Signed fourth-power decompositions of a rational h, and the expansion of a
// quadruple A^4 + h*B^4 = C^4 + h*D^4 into an n-term identity
// sum a_i^4 = sum b_i^4 (optionally with weights).
//
// With h = sum_i s_i * (c_i/d)^4 the quadruple turns into
//
//   (d*A)^4 + sum_i s_i*(c_i*B)^4 = (d*C)^4 + sum_i s_i*(c_i*D)^4,
//
// and moving the negative terms across gives n positive fourth powers on
// each side.  Everything is verified exactly before being returned.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "biquad/derive.hpp"
#include "biquad/numeric.hpp"

namespace biquad {

struct DecompositionTerm {
    int sign = 1;        // +1 or -1
    BigInt weight = 1;   // >= 1
    Rational base;       // nonzero; stored positive (fourth powers ignore sign)
};

// h = sum sign_i * weight_i * base_i^4, term order preserved as given.
class Decomposition {
  public:
    explicit Decomposition(std::vector<DecompositionTerm> terms) : terms_(std::move(terms)) {
        if (terms_.empty()) throw DomainError("decomposition needs at least one term");
        value_ = Rational(0);
        for (auto& t : terms_) {
            if (t.sign != 1 && t.sign != -1) throw DomainError("decomposition sign must be +-1");
            if (t.weight < 1) throw DomainError("decomposition weight must be >= 1");
            if (t.base.is_zero()) throw DomainError("decomposition base must be nonzero");
            t.base = abs(t.base);
            value_ += Rational(t.sign) * Rational(t.weight) * pow4(t.base);
        }
    }

    // Comma-separated terms "sign [weight*] num[/den] ^4", e.g.
    // "+5/2^4,-1/2^4,-4/2^4" or "+2*1^4,+3*1^4".
    static Decomposition parse(std::string_view text);

    const std::vector<DecompositionTerm>& terms() const { return terms_; }
    const Rational& value() const { return value_; }
    std::size_t size() const { return terms_.size(); }

    bool weighted() const {
        for (const auto& t : terms_)
            if (t.weight != 1) return true;
        return false;
    }

    bool distinct_bases() const {
        std::vector<Rational> bases;
        for (const auto& t : terms_) bases.push_back(t.base);
        std::sort(bases.begin(), bases.end());
        return std::adjacent_find(bases.begin(), bases.end()) == bases.end();
    }

    // Least d with every base expressible as integer/d.
    BigInt shared_denominator() const {
        BigInt d = 1;
        for (const auto& t : terms_) d = boost::multiprecision::lcm(d, t.base.den());
        return d;
    }

    std::string str() const {
        std::string out;
        for (const auto& t : terms_) {
            out += (t.sign > 0 ? '+' : '-');
            if (t.weight != 1) out += t.weight.str() + "*";
            out += t.base.str() + "^4";
            out += ',';
        }
        out.pop_back();
        return out;
    }

    std::vector<std::string> term_strings() const {
        std::vector<std::string> out;
        for (const auto& t : terms_) {
            std::string s(1, t.sign > 0 ? '+' : '-');
            if (t.weight != 1) s += t.weight.str() + "*";
            s += t.base.str() + "^4";
            out.push_back(std::move(s));
        }
        return out;
    }

  private:
    std::vector<DecompositionTerm> terms_;
    Rational value_;
};

inline Decomposition Decomposition::parse(std::string_view text) {
    std::vector<DecompositionTerm> terms;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find(',', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view item = text.substr(pos, end - pos);
        while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
        while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
        if (item.empty()) throw ParseError("empty decomposition term");

        DecompositionTerm term;
        if (item.front() == '+' || item.front() == '-') {
            term.sign = item.front() == '+' ? 1 : -1;
            item.remove_prefix(1);
        }
        if (item.size() < 2 || item.substr(item.size() - 2) != "^4")
            throw ParseError("decomposition term must end in ^4: '" + std::string(item) + "'");
        item.remove_suffix(2);
        if (auto star = item.find('*'); star != std::string_view::npos) {
            const Rational w = Rational::parse(item.substr(0, star));
            if (!w.is_integer() || w.sign() <= 0)
                throw ParseError("decomposition weight must be a positive integer");
            term.weight = w.num();
            item.remove_prefix(star + 1);
        }
        term.base = Rational::parse(item);
        terms.push_back(std::move(term));
        pos = end + 1;
    }
    return Decomposition(std::move(terms));
}

// ---------------------------------------------------------------------------
// Decomposition search: h = sum of exactly (n-1) signed fourth powers c_i/d,
// with 1 <= c_i <= bound and 1 <= d <= bound.

namespace detail {

// Signed multisets of k fourth powers summing to target, numerators in
// [1, bound].  Canonical generation: (c, sign) nondecreasing with '+' before
// '-' among equal numerators, which both deduplicates and fixes the order.
template <typename Int>
inline void signed_power_sums(int k, Int bound, const Int& target,
                              std::vector<std::vector<std::pair<int, Int>>>& out) {
    std::vector<std::pair<int, Int>> picked;
    std::vector<Int> fourth(static_cast<std::size_t>(bound) + 1);
    for (Int c = 1; c <= bound; ++c)
        fourth[static_cast<std::size_t>(c)] = c * c * c * c;
    const Int max_term = fourth[static_cast<std::size_t>(bound)];

    auto rec = [&](auto&& self, int depth, Int min_c, int min_rank, Int acc) -> void {
        if (depth == k) {
            if (acc == target) out.push_back(picked);
            return;
        }
        const Int slack = max_term * (k - depth);
        if (acc - slack > target || acc + slack < target) return;
        for (Int c = min_c; c <= bound; ++c) {
            const Int f = fourth[static_cast<std::size_t>(c)];
            for (int rank = (c == min_c ? min_rank : 0); rank <= 1; ++rank) {
                const int sign = rank == 0 ? 1 : -1;
                picked.emplace_back(sign, c);
                self(self, depth + 1, c, rank, acc + (sign > 0 ? f : -f));
                picked.pop_back();
            }
        }
    };
    rec(rec, 0, 1, 0, Int(0));
}

inline std::string decomposition_key(const Decomposition& dec) {
    std::vector<std::string> parts;
    for (const auto& t : dec.terms())
        parts.push_back((t.sign > 0 ? "+" : "-") + t.weight.str() + "*" + t.base.str());
    std::sort(parts.begin(), parts.end());
    std::string key;
    for (auto& p : parts) key += p + ";";
    return key;
}

}  // namespace detail

// Sort terms ascending by base; when signs are mixed, the largest positive
// term leads.  This is the presentation order used throughout the bundled
// reference identities.
inline std::vector<DecompositionTerm> presentation_order(std::vector<DecompositionTerm> terms) {
    std::stable_sort(terms.begin(), terms.end(),
                     [](const DecompositionTerm& a, const DecompositionTerm& b) {
                         return a.base < b.base;
                     });
    const bool mixed = std::any_of(terms.begin(), terms.end(),
                                   [](const auto& t) { return t.sign < 0; }) &&
                       std::any_of(terms.begin(), terms.end(),
                                   [](const auto& t) { return t.sign > 0; });
    if (mixed) {
        std::size_t lead = terms.size();
        for (std::size_t i = 0; i < terms.size(); ++i)
            if (terms[i].sign > 0) lead = i;  // last positive == largest positive
        if (lead < terms.size()) {
            DecompositionTerm t = terms[lead];
            terms.erase(terms.begin() + static_cast<std::ptrdiff_t>(lead));
            terms.insert(terms.begin(), std::move(t));
        }
    }
    return terms;
}

// All decompositions of h into exactly n-1 signed fourth powers over a shared
// denominator d <= bound with numerators <= bound.  Bases reduce, so the same
// decomposition reachable from several d is reported once, at the smallest d.
// Output order: ascending d, then lexicographic numerator sequences.
inline std::vector<Decomposition> decompose(const Rational& h, int n, const BigInt& bound) {
    if (n < 2) throw DomainError("decompose needs n >= 2");
    if (bound < 1) throw DomainError("decompose bound must be >= 1");
    const int k = n - 1;

    std::vector<Decomposition> out;
    std::set<std::string> seen;
    const bool small = bound <= 1000 && k <= 16;  // int64 path: |sum| <= 16*1000^4 < 2^63

    for (BigInt d = 1; d <= bound; ++d) {
        const Rational target = h * pow4(Rational(d));
        if (!target.is_integer()) continue;
        if (boost::multiprecision::abs(target.num()) > pow4(bound) * k) continue;

        std::vector<std::vector<std::pair<int, BigInt>>> combos;
        if (small) {
            std::vector<std::vector<std::pair<int, std::int64_t>>> raw;
            detail::signed_power_sums<std::int64_t>(k, bound.convert_to<std::int64_t>(),
                                                    target.num().convert_to<std::int64_t>(), raw);
            for (auto& combo : raw) {
                combos.emplace_back();
                for (auto& [s, c] : combo) combos.back().emplace_back(s, BigInt(c));
            }
        } else {
            detail::signed_power_sums<BigInt>(k, bound, target.num(), combos);
        }

        for (const auto& combo : combos) {
            std::vector<DecompositionTerm> terms;
            for (const auto& [sign, c] : combo)
                terms.push_back({sign, 1, Rational(c, d)});
            Decomposition dec(presentation_order(std::move(terms)));
            if (seen.insert(detail::decomposition_key(dec)).second) out.push_back(std::move(dec));
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Identities.

struct Verdict {
    bool valid = false;
    bool nontrivial = false;
};

// Two lists of positive integers with sum of fourth powers equal; weights are
// per-term and empty for the plain sum a_i^4 = sum b_i^4 case.
struct Identity {
    std::vector<BigInt> left, right;
    std::vector<BigInt> left_weights, right_weights;

    bool weighted() const { return !left_weights.empty(); }

    std::string str() const {
        auto side = [](const std::vector<BigInt>& terms, const std::vector<BigInt>& weights) {
            std::string s;
            for (std::size_t i = 0; i < terms.size(); ++i) {
                if (i) s += '+';
                if (!weights.empty() && weights[i] != 1) s += weights[i].str() + "*";
                s += terms[i].str() + "^4";
            }
            return s;
        };
        return side(left, left_weights) + "=" + side(right, right_weights);
    }
};

inline Verdict verify_identity(std::span<const BigInt> left, std::span<const BigInt> right,
                               std::span<const BigInt> left_weights = {},
                               std::span<const BigInt> right_weights = {}) {
    if (left.size() != right.size())
        throw DomainError("verify_identity: term counts differ");
    if (left_weights.size() != right_weights.size() ||
        (!left_weights.empty() && left_weights.size() != left.size()))
        throw DomainError("verify_identity: weight lists do not match terms");

    BigInt lsum = 0, rsum = 0;
    for (std::size_t i = 0; i < left.size(); ++i) {
        const BigInt lw = left_weights.empty() ? BigInt(1) : left_weights[i];
        const BigInt rw = right_weights.empty() ? BigInt(1) : right_weights[i];
        lsum += lw * pow4(left[i]);
        rsum += rw * pow4(right[i]);
    }

    auto keyed = [](std::span<const BigInt> terms, std::span<const BigInt> weights) {
        std::vector<std::pair<BigInt, BigInt>> v;
        for (std::size_t i = 0; i < terms.size(); ++i)
            v.emplace_back(weights.empty() ? BigInt(1) : weights[i], terms[i]);
        std::sort(v.begin(), v.end());
        return v;
    };
    return Verdict{lsum == rsum, keyed(left, left_weights) != keyed(right, right_weights)};
}

inline Verdict verify_identity(const Identity& id) {
    return verify_identity(id.left, id.right, id.left_weights, id.right_weights);
}

namespace detail {

struct ExpansionSides {
    std::vector<BigInt> left, right;            // term bases
    std::vector<BigInt> left_w, right_w;        // weights, parallel
};

// Shared skeleton: A/C lead, then the positive-sign block, then the terms
// moved across from the other side, keeping decomposition order inside each
// block.
inline ExpansionSides expansion_sides(const Quadruple& quad, const Decomposition& dec) {
    if (dec.value() != quad.h)
        throw DomainError("decomposition sums to " + dec.value().str() +
                          ", quadruple solves h=" + quad.h.str());
    const BigInt d = dec.shared_denominator();
    ExpansionSides s;
    s.left.push_back(d * quad.a());
    s.right.push_back(d * quad.c());
    s.left_w.push_back(1);
    s.right_w.push_back(1);
    for (const auto& t : dec.terms()) {
        if (t.sign < 0) continue;
        const BigInt c = t.base.num() * (d / t.base.den());
        s.left.push_back(c * quad.b());
        s.right.push_back(c * quad.d());
        s.left_w.push_back(t.weight);
        s.right_w.push_back(t.weight);
    }
    for (const auto& t : dec.terms()) {
        if (t.sign > 0) continue;
        const BigInt c = t.base.num() * (d / t.base.den());
        s.left.push_back(c * quad.d());
        s.right.push_back(c * quad.b());
        s.left_w.push_back(t.weight);
        s.right_w.push_back(t.weight);
    }
    return s;
}

inline void reduce_primitive(std::vector<BigInt>& left, std::vector<BigInt>& right) {
    std::vector<BigInt> all(left);
    all.insert(all.end(), right.begin(), right.end());
    const BigInt g = gcd_of(all);
    if (g > 1) {
        for (auto& v : left) v /= g;
        for (auto& v : right) v /= g;
    }
}

}  // namespace detail

// Expand an (unweighted) quadruple into an n-term identity.  With
// cancel=false both sides keep exactly n terms; cancel=true removes terms
// appearing on both sides, re-reduces, and reports the sides sorted.
inline Identity expand_identity(const Quadruple& quad, const Decomposition& dec, bool cancel) {
    if (dec.weighted())
        throw DomainError("expand_identity requires an unweighted decomposition");
    auto sides = detail::expansion_sides(quad, dec);
    detail::reduce_primitive(sides.left, sides.right);

    if (cancel) {
        for (std::size_t i = 0; i < sides.left.size();) {
            auto match = std::find(sides.right.begin(), sides.right.end(), sides.left[i]);
            if (match != sides.right.end()) {
                sides.right.erase(match);
                sides.left.erase(sides.left.begin() + static_cast<std::ptrdiff_t>(i));
            } else {
                ++i;
            }
        }
        if (sides.left.empty()) throw TrivialIdentity("all terms cancelled");
        detail::reduce_primitive(sides.left, sides.right);
        std::sort(sides.left.begin(), sides.left.end());
        std::sort(sides.right.begin(), sides.right.end());
    }

    Identity id{std::move(sides.left), std::move(sides.right), {}, {}};
    const Verdict v = verify_identity(id);
    if (!v.valid) throw Error("expand_identity: exact verification failed");
    if (!v.nontrivial) throw TrivialIdentity("expansion of " + quad.str() + " is a permutation");
    return id;
}

// Weighted variant: h = sum s_i*w_i*base_i^4 yields
// sum w_i*x_i^4 = sum w_j*y_j^4 with matching weight multisets on both sides.
inline Identity expand_weighted(const Quadruple& quad, const Decomposition& dec) {
    if (!dec.weighted()) return expand_identity(quad, dec, false);
    auto sides = detail::expansion_sides(quad, dec);
    detail::reduce_primitive(sides.left, sides.right);
    Identity id{std::move(sides.left), std::move(sides.right), std::move(sides.left_w),
                std::move(sides.right_w)};
    const Verdict v = verify_identity(id);
    if (!v.valid) throw Error("expand_weighted: exact verification failed");
    if (!v.nontrivial) throw TrivialIdentity("weighted expansion of " + quad.str() + " is trivial");
    return id;
}

}  // namespace biquad
