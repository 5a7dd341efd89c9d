#include <gtest/gtest.h>

#include "uebkit/heisenberg.hpp"
#include "uebkit/induce.hpp"
#include "uebkit/nice.hpp"

using namespace uebkit;

namespace {

struct Invert {
    int operator()(int h, int n) const { return h % 2 ? (4 - n) % 4 : n; }
};
using Z4Z4 = SemidirectProduct<CyclicGroup, CyclicGroup, Invert>;

std::vector<std::size_t> indices_where(std::size_t n, const std::function<bool(std::size_t)>& pred) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < n; ++i)
        if (pred(i)) out.push_back(i);
    return out;
}

}  // namespace

TEST(Induce, SubgroupCheck) {
    HeisenbergGroup h(3);
    EXPECT_THROW(require_subgroup(h, {0, 1}), std::invalid_argument);
    EXPECT_THROW(require_subgroup(h, {1, 2}), std::invalid_argument);
    EXPECT_NO_THROW(require_subgroup(h, {0, 1, 2}));
}

TEST(Induce, RegularCharacter) {
    HeisenbergGroup h(3);
    auto chi = induce_character(h, {0}, [](std::size_t) { return PhasedScalar(1); });
    EXPECT_EQ(chi(0), PhasedScalar(27));
    for (std::size_t i = 1; i < h.order(); ++i) EXPECT_TRUE(chi(i).is_zero());
}

TEST(Induce, CenterOfH3) {
    HeisenbergGroup h(3);
    auto k = indices_where(h.order(), [&](std::size_t i) { auto e = h.element_at(i); return e.x == 0 && e.y == 0; });
    auto psi = [&](std::size_t i) { return PhasedScalar::zeta(3, h.element_at(i).z); };
    auto chi = induce_character(h, k, psi);
    // Central x has only itself as conjugate: chi = 27/3 psi. Others never meet the center.
    for (std::size_t i = 0; i < h.order(); ++i) {
        auto e = h.element_at(i);
        PhasedScalar expect = (e.x == 0 && e.y == 0) ? PhasedScalar::zeta(3, e.z).scaled(Rational(9)) : PhasedScalar(0);
        EXPECT_EQ(chi(i), expect) << e.str();
    }
    EXPECT_TRUE(is_class_function(h, chi));

    auto rep = induce_representation(h, k, [&](std::size_t i) { return ExactMatrix::identity(1).times(psi(i)); });
    EXPECT_EQ(rep.dim(), 9u);
    EXPECT_TRUE(is_block_monomial(rep));
    EXPECT_EQ(sparsity_check(rep), Rational(8, 9));
    for (std::size_t i = 0; i < h.order(); ++i) EXPECT_EQ(rep.matrices[i].trace(), chi(i));
    // Homomorphism, and the restriction to K contains psi in the first block.
    for (std::size_t a = 0; a < h.order(); a += 5)
        for (std::size_t b = 0; b < h.order(); b += 7)
            EXPECT_EQ(rep.matrices[a] * rep.matrices[b], rep.matrices[h.index_of(h.compose(h.element_at(a), h.element_at(b)))]);
    for (std::size_t i : k) EXPECT_EQ(rep.matrices[i].at(0, 0), psi(i));
}

TEST(Induce, WholeGroupGivesOriginal) {
    HeisenbergGroup h(3);
    std::vector<std::size_t> all(h.order());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    auto rep = induce_representation(h, all, [&](std::size_t i) { return heisenberg_matrix(h.element_at(i)); });
    EXPECT_EQ(rep.dim(), 3u);
    for (std::size_t i = 0; i < h.order(); ++i) EXPECT_EQ(rep.matrices[i], heisenberg_matrix(h.element_at(i)));
}

TEST(Induce, HeisenbergFromAbelianNormalSubgroup) {
    for (int d : {3, 5}) {
        HeisenbergGroup h(d);
        auto k = indices_where(h.order(), [&](std::size_t i) { return h.element_at(i).x == 0; });
        auto psi = [&](std::size_t i) { return PhasedScalar::zeta(d, h.element_at(i).z); };
        auto rep = induce_representation(h, k, [&](std::size_t i) { return ExactMatrix::identity(1).times(psi(i)); });
        EXPECT_EQ(rep.dim(), static_cast<std::size_t>(d));
        EXPECT_EQ(sparsity_check(rep), Rational(d - 1, d));
        auto chi = induce_character(h, k, psi);
        for (std::size_t i = 0; i < h.order(); ++i) EXPECT_EQ(rep.matrices[i].trace(), chi(i));
    }
}

TEST(Induce, PauliSparsity) {
    for (int d = 2; d <= 6; ++d) {
        auto rep = pauli_rep(d);
        std::vector<ExactMatrix> ms;
        for (std::size_t k = 0; k < rep.group().order(); ++k) ms.push_back(rep(rep.group().element_at(k)));
        EXPECT_EQ(min_zero_fraction(ms), Rational(d - 1, d));
    }
}

TEST(Induce, IndexTwoInSemidirect) {
    Z4Z4 g(CyclicGroup(4), CyclicGroup(4), Invert{});
    ASSERT_TRUE(verify_group_axioms(g));
    auto k = indices_where(g.order(), [&](std::size_t i) { return g.element_at(i).second % 2 == 0; });
    auto psi = [&](std::size_t i) {
        auto e = g.element_at(i);
        return PhasedScalar::zeta(4, e.first) * PhasedScalar(e.second == 2 ? -1 : 1);
    };
    auto chi = induce_character(g, k, psi);
    EXPECT_TRUE(is_class_function(g, chi));
    EXPECT_EQ(chi(0), PhasedScalar(2));
    auto rep = induce_representation(g, k, [&](std::size_t i) { return ExactMatrix::identity(1).times(psi(i)); });
    EXPECT_TRUE(is_block_monomial(rep));
    EXPECT_GE(sparsity_check(rep), Rational(1, 2));
    for (std::size_t i = 0; i < g.order(); ++i) EXPECT_EQ(rep.matrices[i].trace(), chi(i));
    for (std::size_t a = 0; a < g.order(); ++a)
        for (std::size_t b = 0; b < g.order(); ++b)
            EXPECT_EQ(rep.matrices[a] * rep.matrices[b], rep.matrices[g.index_of(g.compose(g.element_at(a), g.element_at(b)))]);
}

TEST(Induce, TwoDimensionalBlocks) {
    // Induce the 3-dimensional irreducible of H_3 to H_3 x Z_2 from H_3 x {0}.
    ProductGroup<HeisenbergGroup, CyclicGroup> g(HeisenbergGroup(3), CyclicGroup(2));
    auto k = indices_where(g.order(), [&](std::size_t i) { return g.element_at(i).second == 0; });
    auto rep = induce_representation(g, k, [&](std::size_t i) { return heisenberg_matrix(g.element_at(i).first); });
    EXPECT_EQ(rep.block_dim, 3u);
    EXPECT_EQ(rep.dim(), 6u);
    EXPECT_TRUE(is_block_monomial(rep));
    EXPECT_GE(sparsity_check(rep), Rational(1, 2));
}
