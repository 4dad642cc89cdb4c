#include "tyv/field.hpp"
#include "tyv/rational.hpp"

#include <gtest/gtest.h>

#include <limits>
#include <random>

using tyv::K;
using tyv::Rational;

namespace {

Rational random_rational(std::mt19937_64& rng, long long span) {
    std::uniform_int_distribution<long long> num(-span, span), den(1, span);
    return Rational(num(rng), den(rng));
}

K random_k(std::mt19937_64& rng, long long span) {
    return K(random_rational(rng, span), random_rational(rng, span), random_rational(rng, span), random_rational(rng, span));
}

}  // namespace

TEST(Rational, NormalizesSignAndGcd) {
    Rational q(6, -4);
    EXPECT_EQ(q.str(), "-3/2");
    EXPECT_EQ(Rational(0, 5).str(), "0");
    EXPECT_EQ(Rational::parse("10/4"), Rational(5, 2));
    EXPECT_EQ(Rational::parse("-7"), Rational(-7));
}

TEST(Rational, OverflowPromotesToBig) {
    const long long big = std::numeric_limits<long long>::max();
    Rational a(big), b(big);
    Rational s = a + b;
    EXPECT_FALSE(s.is_small());
    EXPECT_EQ(s.str(), "18446744073709551614");
    Rational back = s - b;
    EXPECT_TRUE(back.is_small());
    EXPECT_EQ(back, a);
    Rational p = a * a;
    EXPECT_EQ(p / a, a);
}

TEST(Rational, FieldAxiomsOnRandomValues) {
    std::mt19937_64 rng(7);
    for (int it = 0; it < 500; ++it) {
        Rational a = random_rational(rng, 1'000'000'000'000LL), b = random_rational(rng, 1000), c = random_rational(rng, 1'000'000);
        EXPECT_EQ((a + b) * c, a * c + b * c);
        EXPECT_EQ(a + b - b, a);
        if (!a.is_zero()) {
            EXPECT_EQ(a * a.inverse(), Rational(1));
        }
    }
}

TEST(Rational, ZeroDenominatorThrows) { EXPECT_THROW(Rational(1, 0), std::domain_error); }

TEST(FieldK, RadicalProducts) {
    EXPECT_EQ(K::sqrt2() * K::sqrt3(), K::sqrt6());
    EXPECT_EQ(K::sqrt2() * K::sqrt2(), K(2));
    EXPECT_EQ(K::sqrt6() * K::sqrt6(), K(6));
    EXPECT_EQ(K::sqrt6() * K::sqrt2(), K(2) * K::sqrt3());
    EXPECT_EQ((K(1) + K::sqrt2()).str(), "1 + sqrt2");
}

TEST(FieldK, SqrtOf) {
    EXPECT_EQ(*K::sqrt_of(Rational(2)), K::sqrt2());
    EXPECT_EQ(*K::sqrt_of(Rational(1, 2)), K::sqrt2() * K(Rational(1, 2)));
    EXPECT_EQ(*K::sqrt_of(Rational(27)), K(3) * K::sqrt3());
    EXPECT_EQ(*K::sqrt_of(Rational(2, 3)), K::sqrt6() * K(Rational(1, 3)));
    EXPECT_FALSE(K::sqrt_of(Rational(5)).has_value());
    EXPECT_FALSE(K::sqrt_of(Rational(-2)).has_value());
}

TEST(FieldK, RandomInverseAndDistributivity) {
    std::mt19937_64 rng(11);
    for (int it = 0; it < 300; ++it) {
        K x = random_k(rng, 50), y = random_k(rng, 50), z = random_k(rng, 50);
        EXPECT_EQ(x * (y + z), x * y + x * z);
        EXPECT_EQ(x * y, y * x);
        EXPECT_EQ((x * y) * z, x * (y * z));
        if (!x.is_zero()) {
            EXPECT_TRUE((x * x.inverse()).is_one()) << x;
        }
    }
}
