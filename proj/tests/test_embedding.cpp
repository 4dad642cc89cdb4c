#include "tyv/embedding.hpp"

#include <gtest/gtest.h>

#include <map>

using namespace tyv;

namespace {

std::shared_ptr<const Embedding> embedding(const std::string& t, Mutation m = {}) {
    return std::make_shared<const Embedding>(std::make_shared<const ChevalleyData>(LieType::parse(t)), std::move(m));
}

std::map<std::string, Outcome> run_all(const std::vector<CheckItem>& items) {
    std::map<std::string, Outcome> out;
    for (const auto& it : items) out[it.id] = it.run();
    return out;
}

}  // namespace

TEST(Embedding, RankOneImages) {
    auto e = embedding("A1");
    const Fragment& f = e->frag();
    EXPECT_TRUE((e->phi_b0(0) - f.lift(e->xp(0) - e->xm(0))).is_zero());
    // phi(h_1) = 2 xi_1 - xi^2 + 2 (x^+)^2
    FragElem want = f.symbol(SymKind::Xi, 0) * K(2) + f.lift(e->xp(0) * e->xp(0) * K(2) - e->xi(0) * e->xi(0));
    EXPECT_TRUE((e->phi_h1(0) - want).is_zero());
    EXPECT_EQ(e->casimir_k(), e->b(0) * e->b(0) * K(Rational(-1, 2)));
}

TEST(Embedding, VHasOneAnticommutatorPerPositiveRoot) {
    auto e = embedding("A2");
    const auto& cd = e->data();
    for (int i = 0; i < 2; ++i) {
        Element<K> v = e->v(i);
        int pairs = 0;
        for (int k = 0; k < e->npos(); ++k) {
            Word w{static_cast<Gen>(cd.neg(k)), static_cast<Gen>(cd.pos(k))};
            pairs += !v.coeff(w).is_zero();
        }
        EXPECT_EQ(pairs, e->npos());
        Word xx{static_cast<Gen>(cd.cartan(i)), static_cast<Gen>(cd.cartan(i))};
        EXPECT_FALSE(v.coeff(xx).is_zero());
    }
}

TEST(Fragment, SymbolBracketsAndOverflow) {
    auto e = embedding("A2");
    const Fragment& f = e->frag();
    FragElem xi1 = f.symbol(SymKind::Xi, 0);
    // [xi_{1,1}, x_1^+] has an x^+_{1,1} part with coefficient (a1,a1) = 2
    FragElem br = frag_commutator(xi1, f.xplus(0));
    ASSERT_EQ(br.symbolic.count(Symbol{SymKind::XPlus, 0}), 1u);
    EXPECT_TRUE(br.symbolic.at(Symbol{SymKind::XPlus, 0}).coeff(Word()) == K(2));
    EXPECT_THROW(xi1 * xi1, FragmentOverflow);
    FragElem p = frag_commutator(f.symbol(SymKind::XPlus, 0), f.xplus(1));
    EXPECT_EQ(p.opaque.size(), 1u);
}

TEST(EmbeddingChecks, PerTypeExamples) {
    auto a2 = run_all(embedding_items(embedding("A2")));
    for (const char* id : {"HBrel", "bbinej", "helper2", "J-identification"}) EXPECT_TRUE(a2[id].pass) << id << a2[id].detail;
    EXPECT_TRUE(run_all(embedding_items(embedding("B2")))["bbi=j"].pass);
    EXPECT_TRUE(run_all(embedding_items(embedding("C2")))["hh-cancellation"].pass);
    EXPECT_TRUE(run_all(embedding_items(embedding("G2")))["hh-cancellation"].pass);
    EXPECT_TRUE(run_all(embedding_items(embedding("A1")))["helper1"].pass);
    EXPECT_TRUE(run_all(embedding_items(embedding("B3")))["helper1"].pass);
    auto cas = run_all(casimir_items(embedding("A2")));
    for (const auto& [id, o] : cas) EXPECT_TRUE(o.pass) << id << o.detail;
}

TEST(EmbeddingChecks, DroppingTheSquareSumBreaksHBrel) {
    auto out = run_all(embedding_items(embedding("A2", Mutation::parse("phi_h_xsq:0"))));
    EXPECT_FALSE(out["HBrel"].pass);
    EXPECT_GT(out["HBrel"].residual_terms, 0u);
    EXPECT_TRUE(out["bbinej"].pass);
}

class EmbeddingTypes : public ::testing::TestWithParam<std::string> {};

TEST_P(EmbeddingTypes, AllItemsPass) {
    auto e = embedding(GetParam());
    for (auto items : {embedding_items(e), casimir_items(e)})
        for (const auto& it : items) {
            Outcome o = it.run();
            EXPECT_TRUE(o.pass) << it.id << ": " << o.detail;
        }
}

INSTANTIATE_TEST_SUITE_P(Acceptance, EmbeddingTypes, ::testing::Values("A1", "A2", "A3", "B2", "B3", "C2", "C3", "G2"));
