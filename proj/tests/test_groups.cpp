#include <gtest/gtest.h>

#include "uebkit/heisenberg.hpp"
#include "uebkit/sl2.hpp"
#include "uebkit/triple_group.hpp"

using namespace uebkit;

TEST(Heisenberg, Composition) {
    HeisenbergGroup h(3);
    EXPECT_EQ(h.compose(h.make(1, 0, 0), h.make(0, 1, 0)), h.make(1, 1, 1));
    EXPECT_EQ(h.compose(h.make(0, 1, 0), h.make(1, 0, 0)), h.make(1, 1, 0));
    auto g = h.make(2, 1, 2);
    EXPECT_EQ(h.compose(g, h.identity()), g);
    EXPECT_THROW(heisenberg_compose(g, HeisenbergGroup(5).make(1, 0, 0)), std::invalid_argument);
}

TEST(Heisenberg, MatchesUnitriangularModel) {
    // (x,y,z) <-> [[1,x,z],[0,1,y],[0,0,1]]
    const int d = 4;
    HeisenbergGroup h(d);
    for (std::size_t i = 0; i < h.order(); ++i) {
        for (std::size_t j = 0; j < h.order(); j += 7) {
            auto a = h.element_at(i), b = h.element_at(j);
            int x = (a.x + b.x) % d, y = (a.y + b.y) % d;
            int z = (a.z + b.z + a.x * b.y) % d;
            EXPECT_EQ(h.compose(a, b), (HeisenbergElement{d, x, y, z}));
        }
    }
}

TEST(Heisenberg, GroupAxioms) {
    EXPECT_TRUE(verify_group_axioms(HeisenbergGroup(3)));
    EXPECT_TRUE(verify_group_axioms(HeisenbergGroup(5)));
    EXPECT_TRUE(verify_group_axioms(SL2Group(5)));
}

TEST(Heisenberg, Automorphisms) {
    HeisenbergGroup h5(5);
    EXPECT_EQ(alpha_aut(h5.make(1, 0, 0)), h5.make(0, 1, 0));
    EXPECT_EQ(beta_aut(h5.make(1, 0, 0)), h5.make(1, 1, 3));
    EXPECT_EQ(alpha_aut(h5.make(0, 0, 1)), h5.make(0, 0, 1));
    EXPECT_TRUE(is_automorphism(h5, [](const HeisenbergElement& g) { return alpha_aut(g); }));
    HeisenbergGroup h11(11);
    EXPECT_TRUE(is_automorphism(h11, [](const HeisenbergElement& g) { return beta_aut(g); }));
    HeisenbergGroup h3(3);
    EXPECT_FALSE(is_automorphism(h3, [&](const HeisenbergElement&) { return h3.identity(); }));
    EXPECT_THROW(alpha_aut(HeisenbergGroup(4).make(1, 0, 0)), std::invalid_argument);
    EXPECT_THROW(beta_aut(HeisenbergGroup(9).make(1, 0, 0)), std::invalid_argument);
    EXPECT_TRUE(HeisenbergAutomorphism::beta(7, 2).is_automorphism());
}

TEST(SL2, OrdersAndIrreducibility) {
    EXPECT_EQ(SL2Group(5).order(), 120u);
    // Brute-force oracle over all 4-tuples.
    int count = 0;
    for (int a = 0; a < 5; ++a)
        for (int b = 0; b < 5; ++b)
            for (int c = 0; c < 5; ++c)
                for (int d = 0; d < 5; ++d) {
                    if ((a * d - b * c - 1) % 5 != 0) continue;
                    // M^3 = I and M != I
                    int a2 = (a * a + b * c) % 5, b2 = (a * b + b * d) % 5, c2 = (c * a + d * c) % 5, d2 = (c * b + d * d) % 5;
                    int a3 = (a2 * a + b2 * c) % 5, b3 = (a2 * b + b2 * d) % 5, c3 = (c2 * a + d2 * c) % 5, d3 = (c2 * b + d2 * d) % 5;
                    bool id = a == 1 && b == 0 && c == 0 && d == 1;
                    if (!id && a3 == 1 && b3 == 0 && c3 == 0 && d3 == 1) ++count;
                }
    EXPECT_EQ(count, 20);
    EXPECT_EQ(sl2_elements_of_order(5, 3).size(), 20u);

    SL2Element al = sl2_alpha(5), be = sl2_beta(5);
    SL2Element gamma = sl2_mul(sl2_mul(be, al), sl2_mul(be, al));
    EXPECT_EQ(gamma, sl2_make(5, 4, 1, 4, 0));
    EXPECT_EQ(element_order(SL2Group(5), gamma), 3u);
    EXPECT_TRUE(acts_irreducibly(gamma));
    EXPECT_FALSE(acts_irreducibly(sl2_make(5, 1, 0, 0, 1)));
    EXPECT_FALSE(acts_irreducibly(be));
}

TEST(SL2, IrreducibleOrderRElements) {
    for (auto [p, r] : {std::pair{5, 3}, std::pair{11, 3}}) {
        auto els = sl2_elements_of_order(p, r);
        EXPECT_FALSE(els.empty());
        for (const auto& m : els) EXPECT_TRUE(acts_irreducibly(m)) << p << " " << m.str();
    }
}

TEST(Groups, CenterAndTransversal) {
    for (int d : {2, 3, 4, 5}) {
        HeisenbergGroup h(d);
        auto z = center(h);
        EXPECT_EQ(z, h.center_elements());
    }
    HeisenbergGroup h3(3);
    auto t = transversal(h3, h3.center_elements());
    ASSERT_EQ(t.size(), 9u);
    EXPECT_EQ(t.front(), h3.identity());
    for (const auto& e : t) EXPECT_EQ(e.z, 0);
    EXPECT_THROW(transversal(h3, {h3.make(1, 0, 0)}), std::invalid_argument);
}

TEST(Groups, SemidirectWithTrivialActionIsDirect) {
    HeisenbergGroup a(3);
    CyclicGroup b(4);
    auto trivial = [](int, const HeisenbergElement& n) { return n; };
    SemidirectProduct<HeisenbergGroup, CyclicGroup, decltype(trivial)> sd(a, b, trivial);
    ProductGroup<HeisenbergGroup, CyclicGroup> dp(a, b);
    for (std::size_t i = 0; i < sd.order(); i += 5) {
        for (std::size_t j = 0; j < sd.order(); j += 3) {
            auto x = sd.compose(sd.element_at(i), sd.element_at(j));
            auto y = dp.compose(dp.element_at(i), dp.element_at(j));
            EXPECT_EQ(sd.index_of(x), dp.index_of(y));
        }
    }
    EXPECT_TRUE(verify_action(a, b, trivial));
}

TEST(Groups, TripleGroupStructure) {
    TripleGroup g = make_triple_group(5, 5, 3);
    EXPECT_EQ(g.order(), 125u * 125u * 27u);
    EXPECT_TRUE(verify_action(g.normal(), g.acting(), g.action(), 200, 1));
    auto z = triple_center(g);
    EXPECT_EQ(z.size(), 75u);
    EXPECT_EQ(center(g).size(), 75u);
    // p = q makes the center Z5 x Z5 x Z3, which is not cyclic.
    EXPECT_EQ(element_order(g, triple_center_generator(g)), 15u);
    for (const auto& gamma : g.action().p_powers) EXPECT_TRUE(gamma.is_automorphism());
    EXPECT_TRUE(acts_irreducibly(g.action().p_powers[1].linear_part()));

    TripleGroup big = make_triple_group(5, 11, 3);
    EXPECT_EQ(big.order(), 4492125u);
    EXPECT_EQ(triple_center(big).size(), 165u);
    EXPECT_EQ(element_order(big, triple_center_generator(big)), 165u);
    EXPECT_THROW(make_triple_group(5, 7, 3), std::invalid_argument);
}
