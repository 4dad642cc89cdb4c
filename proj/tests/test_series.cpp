#include "tyv/series.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace tyv;

using RS = TruncatedSeries<Rational>;

namespace {

RS make(std::vector<Rational> c) { return RS(std::move(c)); }

RS random_series(std::mt19937& rng, int order, bool unit) {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
    return RS::from(order, [&](int k) { return k == 0 && unit ? Rational(1) : Rational(num(rng), den(rng)); });
}

}  // namespace

TEST(Series, ProductExamples) {
    Rational a(3, 7);
    RS f = make({1, a, 0, 0}), g = make({1, -a, 0, 0});
    EXPECT_EQ(f * g, make({1, 0, -a * a, 0}));
    EXPECT_EQ(f * RS::constant(Rational(1), 3), f);
    RS shorter = make({1, 2});
    EXPECT_EQ((f * shorter).order(), 1);
}

TEST(Series, InverseExamples) {
    Rational a(2);
    RS f = make({1, a, 0, 0});
    EXPECT_EQ(f.invert(), make({1, -a, a * a, -a * a * a}));
    EXPECT_EQ(RS::constant(Rational(1), 5).invert(), RS::constant(Rational(1), 5));
    std::mt19937 rng(2);
    for (int it = 0; it < 50; ++it) {
        RS g = random_series(rng, 6, true);
        EXPECT_EQ(g.invert().invert(), g);
        EXPECT_EQ(g * g.invert(), RS::constant(Rational(1), 6));
    }
}

TEST(Series, NegateArgument) {
    RS f = make({1, 5, 7, 11});
    EXPECT_EQ(f.negate_arg(), make({1, -5, 7, -11}));
    EXPECT_EQ(f.negate_arg().negate_arg(), f);
}

TEST(Series, ShiftArgument) {
    Rational a(2), c(3);
    // a/(u+c) = a u^-1 - ac u^-2 + ac^2 u^-3 - ...
    RS f = make({0, a, 0, 0, 0});
    EXPECT_EQ(f.shift_arg(c), make({0, a, -a * c, a * c * c, -a * c * c * c}));
    std::mt19937 rng(8);
    for (int it = 0; it < 50; ++it) {
        RS g = random_series(rng, 7, false);
        Rational s(static_cast<int>(rng() % 11) - 5, static_cast<int>(rng() % 4) + 1);
        EXPECT_EQ(g.shift_arg(Rational(0)), g);
        EXPECT_EQ(g.shift_arg(s).shift_arg(-s), g);
        RS h = random_series(rng, 7, false);
        EXPECT_EQ((g * h).shift_arg(s), g.shift_arg(s) * h.shift_arg(s));
    }
}

TEST(Series, TimesUDropPole) {
    RS f = make({1, 2, 3, 4});
    RS g = f.times_u_drop_pole();
    EXPECT_EQ(g.order(), 2);
    EXPECT_EQ(g[0], Rational(2));
    EXPECT_EQ(g[2], Rational(4));
}

TEST(IWeight, Examples) {
    const int N = 8;
    EXPECT_EQ(iweight_eigenvalue({}, Rational(1), N), TruncatedSeries<K>::constant(K(1), N));
    EXPECT_EQ(iweight_eigenvalue({K(0)}, Rational(1), N), TruncatedSeries<K>::constant(K(1), N));
    K b(Rational(5, 2));
    EXPECT_EQ(iweight_eigenvalue({b, -b}, Rational(1), N), TruncatedSeries<K>::constant(K(1), N));

    // (u^2 - (1/2 - a)^2) / (u^2 - (1/2 + a)^2) = 1 + 2a u^-2 + 2a(1/2 + a)^2 u^-4 + ...
    K a(Rational(1, 3));
    auto f = iweight_eigenvalue({a}, Rational(1), N);
    K p = (K(Rational(1, 2)) - a) * (K(Rational(1, 2)) - a), q = (K(Rational(1, 2)) + a) * (K(Rational(1, 2)) + a);
    std::vector<K> want(N + 1, K());
    want[0] = K(1);
    for (int k = 1; 2 * k <= N; ++k) {
        K qk(1);
        for (int s = 1; s < k; ++s) qk *= q;
        want[2 * k] = qk * (q - p);
    }
    EXPECT_EQ(f, TruncatedSeries<K>(want));
    EXPECT_EQ(f[2], a * K(2));
    EXPECT_EQ(f[4], a * K(2) * q);
}
