#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "biquad/numeric.hpp"

using namespace biquad;

TEST(PerfectSquare, CurveValueFromKnownPoint) {
    // Cubic value at X=165 for the model with coefficients (-300, 29700,
    // -980100), computed here with plain integer arithmetic: it must be the
    // square of the known Y=495.
    const BigInt x = 165;
    const BigInt value = x * x * x - 300 * x * x + 29700 * x - 980100;
    EXPECT_EQ(value, BigInt(245025));
    const auto root = perfect_square_root(value);
    ASSERT_TRUE(root.has_value());
    EXPECT_EQ(*root, BigInt(495));
}

TEST(PerfectSquare, EdgeCases) {
    EXPECT_EQ(perfect_square_root(BigInt(0)), BigInt(0));
    EXPECT_EQ(perfect_square_root(BigInt(1)), BigInt(1));
    EXPECT_FALSE(perfect_square_root(BigInt(2)).has_value());
    EXPECT_FALSE(perfect_square_root(BigInt(-4)).has_value());
    const BigInt big = BigInt("1000000000000000009");
    EXPECT_EQ(perfect_square_root(big * big), big);
    EXPECT_FALSE(perfect_square_root(big * big + 1).has_value());
}

TEST(PerfectSquare, AgreesWithBruteForceScanUpTo1e6) {
    // Independent oracle: walk v upward keeping the largest r with r^2 <= v.
    BigInt r = 0;
    for (long v = 0; v <= 1000000; ++v) {
        while ((r + 1) * (r + 1) <= v) ++r;
        const bool is_square = r * r == v;
        const auto got = perfect_square_root(BigInt(v));
        ASSERT_EQ(got.has_value(), is_square) << "v=" << v;
        if (is_square) ASSERT_EQ(*got, r) << "v=" << v;
    }
}

TEST(FourthRoot, KnownValues) {
    EXPECT_EQ(integer_fourth_root(BigInt(16)), BigInt(2));
    const BigInt v14 = BigInt(14) * 14 * 14 * 14;  // 38416
    EXPECT_EQ(v14, BigInt(38416));
    EXPECT_EQ(integer_fourth_root(v14), BigInt(14));
    EXPECT_FALSE(integer_fourth_root(BigInt(17)).has_value());
    EXPECT_EQ(integer_fourth_root(BigInt(0)), BigInt(0));
    EXPECT_EQ(integer_fourth_root(BigInt(1)), BigInt(1));
    // 4^4 = 256 but 255, 257 are not fourth powers
    EXPECT_FALSE(integer_fourth_root(BigInt(255)).has_value());
    EXPECT_FALSE(integer_fourth_root(BigInt(257)).has_value());
    EXPECT_THROW(integer_fourth_root(BigInt(-16)), DomainError);
}

TEST(Lcm, DenominatorsOfTripleFromCurveData) {
    const std::vector<Rational> values{Rational(-55, 816), Rational(313, 4080),
                                       Rational(58, 255)};
    EXPECT_EQ(lcm_of_denominators(values), BigInt(4080));

    const std::vector<Rational> sixths{Rational(1, 6), Rational(1, 2), Rational(2, 3)};
    EXPECT_EQ(lcm_of_denominators(sixths), BigInt(6));

    const std::vector<Rational> ints{Rational(3), Rational(5)};
    EXPECT_EQ(lcm_of_denominators(ints), BigInt(1));

    EXPECT_THROW(lcm_of_denominators(std::vector<Rational>{}), DomainError);
}

TEST(Rational, ReductionInvariantExhaustive) {
    // Construct n/d for all |n|, |d| <= 1000 and require the canonical form:
    // positive denominator, gcd 1, exact same value.
    for (long n = -1000; n <= 1000; ++n) {
        for (long d = 1; d <= 1000; ++d) {
            for (long sd : {d, -d}) {
                const Rational r(BigInt(n), BigInt(sd));
                ASSERT_GT(r.den(), 0);
                ASSERT_EQ(boost::multiprecision::gcd(r.num(), r.den()), 1);
                // value preserved: r.num * sd == n * r.den
                ASSERT_EQ(r.num() * sd, BigInt(n) * r.den());
            }
        }
    }
}

TEST(Rational, ExactArithmetic) {
    std::mt19937_64 rng(20240817);
    std::uniform_int_distribution<long long> num(-1000000, 1000000);
    std::uniform_int_distribution<long long> den(1, 1000000);
    for (int i = 0; i < 2000; ++i) {
        const Rational a(num(rng), den(rng));
        const Rational b(num(rng), den(rng));
        ASSERT_EQ((a + b) - b, a);
        if (!b.is_zero()) ASSERT_EQ((a * b) / b, a);
        ASSERT_EQ(a - a, Rational(0));
        ASSERT_EQ((a + b), (b + a));
    }
}

TEST(Rational, DivisionByZeroIsDomainError) {
    EXPECT_THROW(Rational(1) / Rational(0), DomainError);
    EXPECT_THROW(Rational(BigInt(1), BigInt(0)), DomainError);
}

TEST(Rational, ParseAndFormat) {
    EXPECT_EQ(Rational::parse("-55/816").str(), "-55/816");
    EXPECT_EQ(Rational::parse("4/8").str(), "1/2");
    EXPECT_EQ(Rational::parse("-51/21").str(), "-17/7");
    EXPECT_EQ(Rational::parse("7"), Rational(7));
    EXPECT_EQ(Rational::parse("-0"), Rational(0));
    EXPECT_EQ(Rational::parse("3/-6"), Rational(-1, 2));
    EXPECT_THROW(Rational::parse(""), ParseError);
    EXPECT_THROW(Rational::parse("x/2"), ParseError);
    EXPECT_THROW(Rational::parse("1/0"), ParseError);
    EXPECT_THROW(Rational::parse("1.5"), ParseError);
}

TEST(Rational, Ordering) {
    EXPECT_LT(Rational(1, 3), Rational(1, 2));
    EXPECT_LT(Rational(-1, 2), Rational(-1, 3));
    EXPECT_GT(Rational(5), Rational(9, 2));
    EXPECT_EQ(Rational(2, 4), Rational(1, 2));
    EXPECT_LT(Rational(-5), Rational(0));
}

TEST(Rational, PowAndAbs) {
    EXPECT_EQ(pow4(Rational(-3, 2)), Rational(81, 16));
    EXPECT_EQ(pow(Rational(2, 3), 3), Rational(8, 27));
    EXPECT_EQ(pow(Rational(7), 0), Rational(1));
    EXPECT_EQ(abs(Rational(-5, 3)), Rational(5, 3));
    EXPECT_EQ(pow4(BigInt(-3)), BigInt(81));
}
