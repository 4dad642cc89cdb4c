#include "tyv/root_checks.hpp"
#include "tyv/root_data.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace tyv;

namespace {

std::shared_ptr<const ChevalleyData> chevalley_of(const std::string& t) { return std::make_shared<const ChevalleyData>(LieType::parse(t)); }

RootVec neg(RootVec v) {
    for (int& x : v) x = -x;
    return v;
}

}  // namespace

TEST(LieType, Parse) {
    EXPECT_EQ(LieType::parse("C_2").name(), "C2");
    EXPECT_EQ(LieType::parse("g2").name(), "G2");
    EXPECT_THROW(LieType::parse("B1"), std::invalid_argument);
    EXPECT_THROW(LieType::parse("D3"), std::invalid_argument);
    EXPECT_THROW(LieType::parse("Q7"), std::invalid_argument);
    EXPECT_THROW(LieType::parse("A"), std::invalid_argument);
}

TEST(RootSystem, RankOneAndRankTwoData) {
    auto a1 = chevalley_of("A1");
    ASSERT_EQ(a1->roots().num_positive(), 1);
    EXPECT_EQ(a1->roots().gram(0, 0), 2);
    EXPECT_EQ(a1->roots().d(0), 1);

    auto c2 = chevalley_of("C2");
    std::vector<RootVec> want{{1, 0}, {0, 1}, {1, 1}, {2, 1}};
    EXPECT_EQ(c2->roots().positive(), want);
    EXPECT_EQ(c2->roots().d(0), 1);
    EXPECT_EQ(c2->roots().d(1), 2);

    auto g2 = chevalley_of("G2");
    EXPECT_EQ(g2->roots().num_positive(), 6);
    EXPECT_EQ(g2->roots().d(0), 1);
    EXPECT_EQ(g2->roots().d(1), 3);
}

TEST(RootSystem, GramEntries) {
    EXPECT_EQ(chevalley_of("A2")->roots().gram(0, 1), -1);
    EXPECT_EQ(chevalley_of("B2")->roots().gram(0, 1), -2);
    EXPECT_EQ(chevalley_of("B2")->roots().d(0), 2);
    for (std::string t : {"A3", "B3", "C3", "D4", "G2"}) {
        auto cd = chevalley_of(t);
        const RootSystem& rs = cd->roots();
        for (const auto& a : rs.positive()) {
            int sq = rs.inner(a, a);
            EXPECT_TRUE(sq == 2 || sq == 4 || sq == 6) << t;
        }
    }
}

TEST(Chevalley, EtaExamples) {
    auto a2 = chevalley_of("A2");
    EXPECT_EQ(a2->eta({1, 0}, {0, 1}), K(1));
    // alpha_1 + alpha_1 is not a root
    EXPECT_TRUE(a2->eta({1, 0}, {1, 0}).is_zero());
    EXPECT_TRUE(a2->eta({1, 1}, {0, 1}).is_zero());
}

TEST(Chevalley, B2EtaSymmetryExhaustive) {
    auto b2 = chevalley_of("B2");
    const RootSystem& rs = b2->roots();
    std::vector<RootVec> all;
    for (const auto& r : rs.positive()) {
        all.push_back(r);
        all.push_back(neg(r));
    }
    int applicable = 0;
    for (const auto& a : all)
        for (const auto& b : all) {
            RootVec s(a.size());
            for (std::size_t i = 0; i < a.size(); ++i) s[i] = a[i] + b[i];
            if (!rs.is_root(s) && !rs.is_root(neg(s))) continue;
            ++applicable;
            EXPECT_EQ(b2->eta(a, b), b2->eta(neg(b), neg(a)));
        }
    EXPECT_GT(applicable, 0);
    EXPECT_TRUE(check_eta(*b2).pass);
}

TEST(Chevalley, GeneratorBrackets) {
    for (std::string t : {"A2", "B2", "G2"}) {
        auto cd = chevalley_of(t);
        for (int i = 0; i < cd->rank(); ++i) {
            SparseVec want{{cd->cartan(i), K(1)}};
            EXPECT_EQ(cd->bracket(cd->pos(i), cd->neg(i)), want) << t;
            for (int j = 0; j < cd->rank(); ++j) {
                SparseVec hx{{cd->pos(j), K(cd->roots().gram(i, j))}};
                EXPECT_EQ(cd->bracket(cd->cartan(i), cd->pos(j)), hx) << t;
            }
        }
        for (int a = 0; a < cd->dim(); ++a) EXPECT_TRUE(cd->bracket(a, a).empty());
    }
}

TEST(Chevalley, OmegaAction) {
    auto cd = chevalley_of("B3");
    for (int i = 0; i < cd->rank(); ++i) EXPECT_EQ(cd->omega(cd->cartan(i)), std::make_pair(cd->cartan(i), -1));
    for (int a = 0; a < cd->dim(); ++a) {
        auto [t, s] = cd->omega(a);
        auto [back, s2] = cd->omega(t);
        EXPECT_EQ(back, a);
        EXPECT_EQ(s * s2, 1);
    }
    // x^+ -> -x^-, so b = x^+ - x^- is fixed and y = x^+ + x^- flips
    for (int k = 0; k < cd->num_positive(); ++k) EXPECT_EQ(cd->omega(cd->pos(k)), std::make_pair(cd->neg(k), -1));
}

TEST(Chevalley, RandomTriplesJacobi) {
    std::mt19937 rng(3);
    auto cd = chevalley_of("G2");
    std::uniform_int_distribution<int> pick(0, cd->dim() - 1), coef(-3, 3);
    for (int it = 0; it < 200; ++it) {
        detail::Dense x(cd->dim()), y(cd->dim()), z(cd->dim());
        for (int k = 0; k < 3; ++k) {
            x[pick(rng)] += K(coef(rng));
            y[pick(rng)] += K(coef(rng));
            z[pick(rng)] += K(coef(rng));
        }
        using detail::add;
        using detail::lie_bracket;
        auto j = add(add(lie_bracket(*cd, x, lie_bracket(*cd, y, z)), lie_bracket(*cd, y, lie_bracket(*cd, z, x))),
                     lie_bracket(*cd, z, lie_bracket(*cd, x, y)));
        EXPECT_EQ(detail::nonzeros(j), 0u);
    }
}

class AllTypes : public ::testing::TestWithParam<std::string> {};

TEST_P(AllTypes, RootDataItemsPass) {
    auto cd = chevalley_of(GetParam());
    for (const auto& item : root_data_items(cd)) {
        Outcome o = item.run();
        EXPECT_TRUE(o.pass) << item.id << ": " << o.detail;
    }
}

INSTANTIATE_TEST_SUITE_P(Acceptance, AllTypes, ::testing::Values("A1", "A2", "A3", "B2", "B3", "C2", "C3", "D4", "G2"));
