#pragma once

// Bounded search for rational points on a curve, plus a file-backed registry
// of known generators keyed by the curve parameter h.
//
// Candidates have the shape X = r/s^2 (the canonical denominator structure of
// rational points), so the search space is two small integer ranges.  With
// the model's coefficients brought over a common denominator Dc, the curve's
// right-hand side at r/s^2 is N / (s^6 * Dc) with
//
//     N = r^3*Dc + (a2*Dc)*r^2*s^2 + (a4*Dc)*r*s^4 + (a6*Dc)*s^6,
//
// and a rational Y exists iff N*Dc is a perfect square (s^6 is one already).

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <future>
#include <map>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <json.hpp>

#include "biquad/curve.hpp"
#include "biquad/numeric.hpp"

namespace biquad {

struct SearchBounds {
    BigInt max_numerator;           // |r| <= max_numerator
    BigInt max_denominator_base{1}; // 1 <= s <= max_denominator_base
    std::size_t max_results = SIZE_MAX;
};

namespace detail {

struct ScaledCurve {
    BigInt dc;  // common denominator of a2, a4, a6
    BigInt c2, c1, c0;
    explicit ScaledCurve(const Curve& c) {
        const std::vector<Rational> coeffs{c.a2(), c.a4(), c.a6()};
        dc = lcm_of_denominators(coeffs);
        c2 = c.a2().num() * (dc / c.a2().den());
        c1 = c.a4().num() * (dc / c.a4().den());
        c0 = c.a6().num() * (dc / c.a6().den());
    }
};

// Scan r in [r_lo, r_hi] for denominator base s; keeps the Y >= 0
// representative of each hit.
inline std::vector<Point> scan_range(const ScaledCurve& sc, const BigInt& s,
                                     const BigInt& r_lo, const BigInt& r_hi) {
    std::vector<Point> hits;
    const BigInt s2 = s * s;
    const BigInt s4 = s2 * s2;
    const BigInt s6 = s4 * s2;
    const BigInt s3 = s2 * s;
    const BigInt y_den = s3 * sc.dc;
    for (BigInt r = r_lo; r <= r_hi; ++r) {
        if (s != 1 && boost::multiprecision::gcd(r, s) != 1) continue;
        const BigInt n = ((r * sc.dc + sc.c2 * s2) * r + sc.c1 * s4) * r + sc.c0 * s6;
        if (n < 0) continue;
        if (auto root = perfect_square_root(n * sc.dc)) {
            hits.emplace_back(Rational(r, s2), Rational(*root, y_den));
        }
    }
    return hits;
}

}  // namespace detail

// Every returned point is on the curve; points are deduplicated up to
// negation (the Y >= 0 representative is kept) and ordered by ascending s,
// then ascending r.  Ranges are fanned out to worker threads and merged back
// in the deterministic order.
inline std::vector<Point> search_points(const Curve& curve, const SearchBounds& bounds) {
    if (bounds.max_numerator < 1 || bounds.max_denominator_base < 1)
        throw DomainError("search bounds must be >= 1");

    const detail::ScaledCurve sc(curve);
    std::vector<Point> out;

    unsigned workers = std::max(1u, std::thread::hardware_concurrency());
    for (BigInt s = 1; s <= bounds.max_denominator_base; ++s) {
        const BigInt lo = -bounds.max_numerator;
        const BigInt hi = bounds.max_numerator;
        const BigInt span = hi - lo + 1;
        BigInt chunk = span / workers + 1;
        if (chunk < 1024) chunk = span;  // not worth spawning for tiny scans

        std::vector<std::future<std::vector<Point>>> parts;
        for (BigInt start = lo; start <= hi; start += chunk) {
            BigInt end = start + chunk - 1;
            if (end > hi) end = hi;
            parts.push_back(std::async(std::launch::async, [&sc, s, start, end] {
                return detail::scan_range(sc, s, start, end);
            }));
        }
        for (auto& part : parts)
            for (Point& p : part.get()) {
                if (out.size() >= bounds.max_results) return out;
                out.push_back(std::move(p));
            }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Generator registry.  JSON array of entries:
//   {"h": "num/den", "points": [["Xnum/Xden", "Ynum/Yden"], ...], "source": "..."}
// Rationals are reduced "num/den" strings, denominator omitted when 1.
// Every point is validated against its curve at load time.

class Registry {
  public:
    struct Entry {
        Rational h;
        std::vector<Point> points;
        std::string source;
    };

    Registry() = default;

    static Registry from_json(const nlohmann::json& doc) {
        if (!doc.is_array()) throw DataError("registry: top-level JSON array expected");
        Registry reg;
        for (const auto& item : doc) {
            Entry entry;
            try {
                entry.h = Rational::parse(item.at("h").get<std::string>());
                entry.source = item.value("source", "");
                for (const auto& pt : item.at("points")) {
                    entry.points.emplace_back(Rational::parse(pt.at(0).get<std::string>()),
                                              Rational::parse(pt.at(1).get<std::string>()));
                }
            } catch (const nlohmann::json::exception& e) {
                throw DataError(std::string("registry: malformed entry: ") + e.what());
            }
            const Curve curve(entry.h);
            for (const Point& p : entry.points)
                if (!curve.contains(p))
                    throw DataError("registry: point " + p.str() + " is not on the curve for h=" +
                                    entry.h.str());
            reg.entries_.push_back(std::move(entry));
        }
        return reg;
    }

    static Registry load_file(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw DataError("registry file not found: " + path);
        nlohmann::json doc;
        try {
            in >> doc;
        } catch (const nlohmann::json::exception& e) {
            throw DataError("registry: invalid JSON in " + path + ": " + e.what());
        }
        return from_json(doc);
    }

    // Registered generators for h, in file order; empty when h is unknown.
    std::vector<Point> generators(const Rational& h) const {
        std::vector<Point> out;
        for (const Entry& e : entries_)
            if (e.h == h) out.insert(out.end(), e.points.begin(), e.points.end());
        return out;
    }

    const std::vector<Entry>& entries() const { return entries_; }

  private:
    std::vector<Entry> entries_;
};

// Resolution order: $BIQUAD_REGISTRY, then ./data/registry.json.
inline std::string registry_default_path() {
    if (const char* env = std::getenv("BIQUAD_REGISTRY")) return env;
    return "data/registry.json";
}

}  // namespace biquad
