#include "tyv/enveloping.hpp"
#include "tyv/pbw.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace tyv;

namespace {

std::shared_ptr<const ChevalleyData> chevalley_of(const std::string& t) { return std::make_shared<const ChevalleyData>(LieType::parse(t)); }

struct Sl2 {
    std::shared_ptr<const ChevalleyData> cd = chevalley_of("A1");
    std::shared_ptr<Algebra<K>> ug = make_enveloping(cd);
    Element<K> xm() const { return ug->gen(static_cast<Gen>(cd->neg(0))); }
    Element<K> xi() const { return ug->gen(static_cast<Gen>(cd->cartan(0))); }
    Element<K> xp() const { return ug->gen(static_cast<Gen>(cd->pos(0))); }
};

Element<K> random_element(const Algebra<K>& alg, std::mt19937& rng, int terms, int maxlen) {
    std::uniform_int_distribution<int> gen(0, static_cast<int>(alg.num_generators()) - 1), len(0, maxlen), coef(-4, 4);
    Element<K> x = alg.zero();
    for (int t = 0; t < terms; ++t) {
        Element<K> m = alg.scalar(K(coef(rng)));
        for (int k = len(rng); k > 0; --k) m = m * alg.gen(static_cast<Gen>(gen(rng)));
        x += m;
    }
    return x;
}

}  // namespace

TEST(Straightening, Sl2Examples) {
    Sl2 s;
    EXPECT_EQ(s.xp() * s.xm(), s.xm() * s.xp() + s.xi());
    EXPECT_EQ(s.xi() * s.xp(), s.xp() * s.xi() + s.xp() * K(2));
    // x^- x^+ is already normal
    Element<K> n = s.xm() * s.xp();
    ASSERT_EQ(n.size(), 1u);
    EXPECT_EQ(n.terms().begin()->first, Word({static_cast<Gen>(0), static_cast<Gen>(2)}));
}

TEST(Straightening, CommutatorExamples) {
    Sl2 s;
    EXPECT_TRUE(commutator(s.xp(), s.xp()).is_zero());
    EXPECT_EQ(commutator(s.xp(), s.xm()), s.xi());
    auto a2 = chevalley_of("A2");
    auto ug = make_enveloping(a2);
    EXPECT_TRUE(commutator(ug->gen(static_cast<Gen>(a2->cartan(0))), ug->gen(static_cast<Gen>(a2->cartan(1)))).is_zero());
    EXPECT_EQ(anticommutator(s.xi(), s.xi()), s.xi() * s.xi() * K(2));
    Element<K> a = s.xm() * s.xp() + s.xi();
    EXPECT_EQ(anticommutator(a, a), a * a * K(2));
}

TEST(CurrentAlgebra, GeneratorCounts) {
    EXPECT_EQ(CurrentAlgebra(chevalley_of("A1"), 1).algebra().num_generators(), 6u);
    CurrentAlgebra u0(chevalley_of("A1"), 0);
    EXPECT_EQ(u0.algebra().num_generators(), 3u);
    EXPECT_TRUE(u0.gen(u0.data().pos(0), 1).is_zero());
}

TEST(CurrentAlgebra, Brackets) {
    CurrentAlgebra c(chevalley_of("A1"), 2);
    const auto& cd = c.data();
    Element<K> xp1 = c.gen(cd.pos(0), 1), xm1 = c.gen(cd.neg(0), 1), xm0 = c.gen(cd.neg(0), 0);
    EXPECT_EQ(commutator(xp1, xm1), c.gen(cd.cartan(0), 2));
    EXPECT_EQ(xp1 * xm0, xm0 * xp1 + c.gen(cd.cartan(0), 1));
    // beyond the truncation the bracket vanishes
    Element<K> xp2 = c.gen(cd.pos(0), 2);
    EXPECT_TRUE(commutator(xp2, xm1).is_zero());
}

TEST(Straightening, RandomAssociativity) {
    std::mt19937 rng(5);
    CurrentAlgebra c(chevalley_of("B2"), 2);
    const auto& alg = c.algebra();
    for (int it = 0; it < 40; ++it) {
        Element<K> x = random_element(alg, rng, 2, 2), y = random_element(alg, rng, 2, 2), z = random_element(alg, rng, 2, 2);
        EXPECT_EQ((x * y) * z, x * (y * z));
        EXPECT_EQ(x * (y + z), x * y + x * z);
    }
}

TEST(Straightening, RandomJacobi) {
    std::mt19937 rng(9);
    auto ug = make_enveloping(chevalley_of("G2"));
    for (int it = 0; it < 40; ++it) {
        Element<K> x = random_element(*ug, rng, 2, 2), y = random_element(*ug, rng, 2, 2), z = random_element(*ug, rng, 2, 1);
        Element<K> j = commutator(x, commutator(y, z)) + commutator(y, commutator(z, x)) + commutator(z, commutator(x, y));
        EXPECT_TRUE(j.is_zero()) << j.str();
    }
}

TEST(WeightFilter, Examples) {
    Sl2 s;
    auto positive = [&](const Word& w) {
        auto wt = s.ug->weight(w);
        return !wt.empty() && wt[0] > 0;
    };
    auto not_positive = [&](const Word& w) { return !positive(w); };
    Element<K> a = s.xm() * s.xi() * s.xp();
    EXPECT_EQ(a.filter(not_positive), a);
    Element<K> b = s.xp() * s.xp();
    EXPECT_TRUE(b.filter(not_positive).is_zero());

    std::mt19937 rng(1);
    for (int it = 0; it < 30; ++it) {
        Element<K> e1 = random_element(*s.ug, rng, 3, 3), e2 = random_element(*s.ug, rng, 3, 3);
        EXPECT_EQ((e1 + e2).filter(positive), e1.filter(positive) + e2.filter(positive));
    }
}

TEST(TensorSquare, FactorsCommuteAndFlip) {
    Sl2 s;
    TensorSquare<K> ts(s.ug);
    Element<K> l = ts.left(s.xp()), r = ts.right(s.xm());
    EXPECT_TRUE(commutator(l, r).is_zero());
    EXPECT_EQ(commutator(ts.left(s.xp()), ts.left(s.xm())), ts.left(s.xi()));
    Element<K> t = ts.tensor(s.xp() * s.xi(), s.xm());
    EXPECT_EQ(ts.flip(ts.flip(t)), t);
    EXPECT_EQ(ts.flip(t), ts.tensor(s.xm(), s.xp() * s.xi()));
}

TEST(Homomorphism, ApplyHomRespectsProducts) {
    Sl2 s;
    TensorSquare<K> ts(s.ug);
    auto delta = [&](const Element<K>& x) {
        return apply_hom(x, ts.algebra(), [&](Gen g) { return ts.left(s.ug->gen(g)) + ts.right(s.ug->gen(g)); },
                         std::function<K(const K&)>([](const K& c) { return c; }));
    };
    std::mt19937 rng(4);
    for (int it = 0; it < 20; ++it) {
        Element<K> x = random_element(*s.ug, rng, 2, 2), y = random_element(*s.ug, rng, 2, 2);
        EXPECT_EQ(delta(x * y), delta(x) * delta(y));
    }
}
