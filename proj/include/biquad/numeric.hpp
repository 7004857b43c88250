#pragma once

// Exact rational arithmetic and the handful of number-theoretic predicates
// the rest of the library needs.  Everything here is value-semantic and
// immutable after construction; no floating point anywhere.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace biquad {

using BigInt = boost::multiprecision::cpp_int;

// ---------------------------------------------------------------------------
// Error taxonomy.  Library code throws; the CLI maps these onto exit codes.

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad argument at a library boundary (division by zero, empty input, ...).
struct DomainError : Error {
    using Error::Error;
};

// Malformed textual input (rationals, decomposition specs, catalog records).
struct ParseError : Error {
    using Error::Error;
};

// Data file violates its own integrity contract (e.g. registry point not on
// its curve).
struct DataError : Error {
    using Error::Error;
};

// Curve parameter h in {0, 1, -1}, or a singular cubic.
struct DegenerateParameter : DomainError {
    using DomainError::DomainError;
};

// Point unusable for the (p, m, q) derivation: infinity or Y = 0.
struct DegeneratePoint : DomainError {
    using DomainError::DomainError;
};

// A quadruple with a zero component; carries no usable identity.
struct TrivialQuadruple : Error {
    using Error::Error;
};

// An expansion collapsed to equal multisets on both sides.
struct TrivialIdentity : Error {
    using Error::Error;
};

// No usable point under the configured bounds / scale sequence.
struct SearchExhausted : Error {
    using Error::Error;
};

// ---------------------------------------------------------------------------
// Rational: arbitrary-precision fraction, always stored reduced with a
// strictly positive denominator.  Zero is 0/1.

class Rational {
  public:
    Rational() : num_(0), den_(1) {}
    Rational(const BigInt& n) : num_(n), den_(1) {}  // NOLINT: implicit by design
    Rational(long long n) : num_(n), den_(1) {}      // NOLINT
    Rational(int n) : num_(n), den_(1) {}            // NOLINT

    Rational(BigInt numerator, BigInt denominator)
        : num_(std::move(numerator)), den_(std::move(denominator)) {
        normalize();
    }

    // Accepts "n", "n/d", with optional leading '-' on the numerator.
    static Rational parse(std::string_view text);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_.sign(); }

    std::string str() const {
        std::string s = num_.str();
        if (den_ != 1) s += "/" + den_.str();
        return s;
    }

    friend Rational operator-(const Rational& a) { return Rational(-a.num_, a.den_, NoReduce{}); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw DomainError("division by zero");
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }

    Rational& operator+=(const Rational& b) { return *this = *this + b; }
    Rational& operator-=(const Rational& b) { return *this = *this - b; }
    Rational& operator*=(const Rational& b) { return *this = *this * b; }
    Rational& operator/=(const Rational& b) { return *this = *this / b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        // Denominators are positive, so cross multiplication preserves order.
        const BigInt lhs = a.num_ * b.den_;
        const BigInt rhs = b.num_ * a.den_;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

  private:
    struct NoReduce {};
    Rational(BigInt n, BigInt d, NoReduce) : num_(std::move(n)), den_(std::move(d)) {}

    void normalize() {
        if (den_.is_zero()) throw DomainError("rational with zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        if (num_.is_zero()) {
            den_ = 1;
            return;
        }
        BigInt g = boost::multiprecision::gcd(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    BigInt num_;
    BigInt den_;
};

inline Rational abs(const Rational& a) { return a.sign() < 0 ? -a : a; }

inline Rational pow(const Rational& base, unsigned exponent) {
    Rational result(1);
    Rational acc = base;
    for (unsigned e = exponent; e != 0; e >>= 1) {
        if (e & 1u) result *= acc;
        if (e > 1) acc *= acc;
    }
    return result;
}

inline BigInt pow4(const BigInt& v) {
    BigInt sq = v * v;
    return sq * sq;
}

inline Rational pow4(const Rational& v) { return pow(v, 4); }

inline Rational Rational::parse(std::string_view text) {
    auto parse_int = [](std::string_view part) -> BigInt {
        if (part.empty()) throw ParseError("empty integer literal");
        std::size_t start = (part[0] == '-' || part[0] == '+') ? 1 : 0;
        if (start == part.size()) throw ParseError("sign without digits");
        for (std::size_t i = start; i < part.size(); ++i)
            if (part[i] < '0' || part[i] > '9')
                throw ParseError("bad integer literal: '" + std::string(part) + "'");
        return BigInt(std::string(part));
    };
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    const BigInt n = parse_int(text.substr(0, slash));
    const BigInt d = parse_int(text.substr(slash + 1));
    if (d.is_zero()) throw ParseError("zero denominator in '" + std::string(text) + "'");
    return Rational(n, d);
}

// ---------------------------------------------------------------------------
// Integer predicates.

// Floor square root; v must be nonnegative.
inline BigInt isqrt(const BigInt& v) {
    if (v < 0) throw DomainError("isqrt of negative value");
    return boost::multiprecision::sqrt(v);
}

// Returns r >= 0 with r^2 == v when v is a perfect square, nothing otherwise.
// Negative inputs simply fail the test.
inline std::optional<BigInt> perfect_square_root(const BigInt& v) {
    if (v < 0) return std::nullopt;
    BigInt r = boost::multiprecision::sqrt(v);
    if (r * r == v) return r;
    return std::nullopt;
}

// Returns r >= 0 with r^4 == v when v is a perfect fourth power.
// Negative input is a caller error.
inline std::optional<BigInt> integer_fourth_root(const BigInt& v) {
    if (v < 0) throw DomainError("fourth root of negative value");
    // floor(sqrt(floor(sqrt(v)))) == floor(v^(1/4)) for nonnegative integers.
    BigInt r = boost::multiprecision::sqrt(boost::multiprecision::sqrt(v));
    if (pow4(r) == v) return r;
    return std::nullopt;
}

inline BigInt lcm_of_denominators(std::span<const Rational> values) {
    if (values.empty()) throw DomainError("lcm_of_denominators on empty list");
    BigInt l = 1;
    for (const Rational& v : values) l = boost::multiprecision::lcm(l, v.den());
    return l;
}

inline BigInt gcd_of(std::span<const BigInt> values) {
    BigInt g = 0;
    for (const BigInt& v : values) g = boost::multiprecision::gcd(g, v);
    return g;
}

}  // namespace biquad
