#include "tyv/bridge.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace tyv;

namespace {

const RttModel& model() {
    static const RttModel m(6);
    return m;
}

}  // namespace

TEST(Rtt, LevelOneIsGl2) {
    const RttGl2& rtt = model().rtt();
    EXPECT_EQ(commutator(rtt.t(1, 2, 1), rtt.t(2, 1, 1)), rtt.t(1, 1, 1) - rtt.t(2, 2, 1));
    EXPECT_TRUE(commutator(rtt.t(1, 1, 1), rtt.t(2, 2, 1)).is_zero());
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j)
            for (int k = 1; k <= 2; ++k)
                for (int l = 1; l <= 2; ++l) {
                    QElem want = rtt.algebra().zero();
                    if (k == j) want += rtt.t(i, l, 1);
                    if (i == l) want -= rtt.t(k, j, 1);
                    EXPECT_EQ(commutator(rtt.t(i, j, 1), rtt.t(k, l, 1)), want);
                }
}

TEST(Rtt, ClosedFormAgainstRecursion) {
    const RttGl2& rtt = model().rtt();
    for (int r = 1; r <= 6; ++r)
        for (int s = 1; s <= 6; ++s) EXPECT_EQ(rtt.closed_form(1, 2, r, 2, 1, s), rtt.brute_force(1, 2, r, 2, 1, s));
    EXPECT_TRUE(rtt_closed_form(rtt, 4).pass);
}

TEST(Rtt, BudgetIsEnforced) {
    RttGl2 small(2);
    EXPECT_THROW(small.t(1, 1, 3), BudgetExceeded);
}

TEST(Rtt, RandomJacobi) {
    const RttGl2& rtt = model().rtt();
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> ij(1, 2), lvl(1, 3);
    for (int it = 0; it < 40; ++it) {
        QElem a = rtt.t(ij(rng), ij(rng), lvl(rng)), b = rtt.t(ij(rng), ij(rng), lvl(rng)), c = rtt.t(ij(rng), ij(rng), lvl(rng));
        QElem j = commutator(a, commutator(b, c)) + commutator(b, commutator(c, a)) + commutator(c, commutator(a, b));
        EXPECT_TRUE(j.is_zero());
    }
}

TEST(Gauss, Reconstruction) {
    const RttSeries& S = model().series();
    EXPECT_EQ(S.T().D1, S.t(1, 1));
    EXPECT_EQ(S.T().F[1], S.t(2, 1)[1]);
    EXPECT_EQ(S.T().D2 + S.T().F * S.T().D1 * S.T().E, S.t(2, 2));
    EXPECT_TRUE(gauss_reconstruction(S).pass);
}

TEST(Determinants, Identities) {
    const RttSeries& S = model().series();
    EXPECT_EQ(S.qdet(), S.T().D1 * S.T().D2.shift_arg(Q(-1)));
    EXPECT_TRUE(sdet_identities(S).pass);
    QSeries e = S.sdet().shift_arg(Q(1, 2));
    for (int k = 1; k <= e.order(); k += 2) EXPECT_TRUE(e[k].is_zero()) << k;
    // the even coefficients are not all trivial
    EXPECT_FALSE(e[2].is_zero());
}

TEST(SMatrix, Examples) {
    const RttSeries& S = model().series();
    EXPECT_TRUE(S.s(1, 1)[1].is_zero());
    EXPECT_EQ(S.S().E[1], -S.S().F[1]);
    EXPECT_TRUE(symmetry(S).pass);
}

TEST(Bridge, ShiftedCurrents) {
    const RttModel& m = model();
    const RttSeries& S = m.series();
    EXPECT_EQ(m.b(0), S.t(2, 1)[1] - S.t(1, 2)[1]);
    EXPECT_EQ(m.b(0), S.T().F[1] - S.T().E[1]);
    QElem D11 = S.T().D1[1], D12 = S.T().D1[2], D21 = S.T().D2[1], D22 = S.T().D2[2];
    QElem E1 = S.T().E[1], F1 = S.T().F[1];
    EXPECT_EQ(m.h(1), D22 * Q(2) - D21 * D21 - D12 * Q(2) + D11 * D11 + F1 * F1 * Q(2) - commutator(E1, F1));
    EXPECT_EQ(S.S().F.shift_arg(Q(-1, 2)), S.S().E.negate_arg().shift_arg(Q(1, 2)));
}

TEST(Bridge, DrinfeldImagesMatch) {
    auto d = std::make_shared<const DrinfeldModel>(10);
    EXPECT_TRUE(bridge_images(*d, model()).pass);
}

TEST(RttSuite, AllItemsPassAtOrderFour) {
    for (const auto& it : rtt_items({4})) {
        Outcome o = it.run();
        EXPECT_TRUE(o.pass) << it.id << ": " << o.detail;
    }
}
