#include "tyv/twisted_current.hpp"

#include <gtest/gtest.h>

using namespace tyv;

namespace {

std::shared_ptr<const TwistedCurrent> current(const std::string& t, int D) {
    return std::make_shared<const TwistedCurrent>(std::make_shared<const ChevalleyData>(LieType::parse(t)), D);
}

std::vector<std::string> failing(const std::vector<CheckItem>& items) {
    std::vector<std::string> out;
    for (const auto& it : items)
        if (!it.run().pass) out.push_back(it.id);
    return out;
}

}  // namespace

TEST(TwistedCurrent, GeneratorImages) {
    auto tc = current("A2", 3);
    const auto& cd = tc->data();
    const auto& c = tc->current();
    for (int i = 0; i < 2; ++i) {
        EXPECT_EQ(tc->h(i, 1), c.gen(cd.cartan(i), 1) * K(2));
        EXPECT_EQ(tc->b(i, 1), c.gen(cd.pos(i), 1) + c.gen(cd.neg(i), 1));
        EXPECT_EQ(tc->b(i, 0), c.gen(cd.pos(i), 0) - c.gen(cd.neg(i), 0));
        EXPECT_TRUE(tc->h(i, 2).is_zero());
        EXPECT_EQ(tc->h(i, -1), tc->algebra().one());
    }
}

TEST(TwistedCurrent, BracketExamples) {
    auto tc = current("B2", 6);
    for (int i = 0; i < 2; ++i) {
        EXPECT_EQ(tc->br(tc->b(i, 1), tc->b(i, 2)), -tc->h(i, 3));
        for (int r = 0; r <= 2; ++r)
            for (int s = 0; s <= r; ++s) {
                K sign((r + s + 1) % 2 ? -1 : 1);
                EXPECT_EQ(tc->br(tc->b(i, r + s + 1), tc->b(i, r - s)), tc->h(i, 2 * r + 1) * sign) << r << "," << s;
            }
    }
}

TEST(Presentation, A2AndA1Pass) {
    EXPECT_TRUE(failing(presentation_items(current("A2", 5))).empty());
    auto a1 = current("A1", 5);
    auto items = presentation_items(a1);
    EXPECT_TRUE(failing(items).empty());
    bool has_extra = false;
    for (const auto& it : items) has_extra = has_extra || it.id == "extra-verified";
    EXPECT_TRUE(has_extra);
}

TEST(Presentation, SerreMutationFailsOnlyThatItem) {
    auto items = presentation_items(current("C2", 6), Mutation::parse("tcfSerre2f:-5"));
    EXPECT_EQ(failing(items), std::vector<std::string>{"tcfSerre2f"});
    auto tchbf = presentation_items(current("A2", 3), Mutation::parse("tchbf:3"));
    EXPECT_EQ(failing(tchbf), std::vector<std::string>{"tchbf"});
}

TEST(Presentation, G2UsesTheCubicSerreRelation) {
    auto items = presentation_items(current("G2", 3));
    EXPECT_TRUE(failing(items).empty());
    auto mutated = presentation_items(current("G2", 3), Mutation::parse("tcfSerre3f.2:-8"));
    EXPECT_EQ(failing(mutated), std::vector<std::string>{"tcfSerre3f"});
}

TEST(DerivationChain, B2Window8) {
    auto tc = current("B2", 8);
    auto items = derivation_chain_items(tc, 8);
    EXPECT_FALSE(items.empty());
    EXPECT_TRUE(failing(items).empty());
}

TEST(Mutation, Parse) {
    Mutation m = Mutation::parse("tcfSerre2f:-5,ty1:3/2");
    EXPECT_EQ(m.coefficient("tcfSerre2f", Rational(-4)), Rational(-5));
    EXPECT_EQ(m.coefficient("ty1", Rational(2)), Rational(3, 2));
    EXPECT_EQ(m.coefficient("other", Rational(7)), Rational(7));
    EXPECT_THROW(Mutation::parse("nocolon"), std::invalid_argument);
    EXPECT_THROW(Mutation::parse("x:abc"), std::invalid_argument);
}
