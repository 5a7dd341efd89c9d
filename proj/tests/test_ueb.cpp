#include <gtest/gtest.h>

#include <random>

#include "uebkit/ueb.hpp"

using namespace uebkit;

namespace {

UnitaryErrorBasis from_members(std::vector<ExactMatrix> ms) {
    UnitaryErrorBasis b;
    b.d = static_cast<int>(ms.front().rows());
    b.members = std::move(ms);
    return b;
}

ExactMatrix antidiag(const PhasedScalar& top, const PhasedScalar& bottom) { return ExactMatrix(2, 2, {0, top, bottom, 0}); }

// Applies c^-1 A^-1 P B^-1, the inverse of the returned equivalence.
ExactMatrix undo(const D2Normalization& n, std::size_t k) {
    return (n.a.inverse() * n.canonical.members[k] * n.b.inverse()).times(n.c[k].inverse());
}

ExactMatrix random_monomial(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> e(0, 7), flip(0, 1);
    ExactMatrix m = ExactMatrix::diagonal({PhasedScalar::zeta(8, e(rng)), PhasedScalar::zeta(8, e(rng))});
    if (flip(rng)) m = antidiag(1, 1) * m;
    return m;
}

}  // namespace

TEST(Ueb, VerifyPauliAndDuplicates) {
    EXPECT_TRUE(verify_ueb(from_members(pauli_set())).valid);
    auto p = pauli_set();
    auto bad = verify_ueb(from_members({p[0], p[1], p[2], p[1]}));
    EXPECT_FALSE(bad.valid);
    ASSERT_EQ(bad.violations.size(), 1u);
    EXPECT_EQ(bad.violations[0].first, 1u);
    EXPECT_EQ(bad.violations[0].second, 3u);
    EXPECT_EQ(bad.violations[0].value, PhasedScalar(2));
    auto e3 = verify_ueb(pauli_basis(3));
    EXPECT_TRUE(e3.valid);
    EXPECT_EQ(e3.pairs_checked, 36u);
    EXPECT_THROW(verify_ueb(from_members({p[0], p[1], p[2]})), std::invalid_argument);
    EXPECT_TRUE(verify_ueb(pauli_basis(5), 3).valid);
}

TEST(Ueb, ShiftAndMultiplyExample) {
    UnitaryErrorBasis b = shift_and_multiply(cyclic_latin(3), HadamardSequence::constant(fourier_hadamard(3)));
    PhasedScalar w = PhasedScalar::zeta(3, 1);
    ExactMatrix e01(3, 3, {0, 1, 0, 0, 0, 1, 1, 0, 0});
    ExactMatrix e12(3, 3, {0, 0, w * w, 1, 0, 0, 0, w, 0});
    EXPECT_EQ(b.members[0 * 3 + 1], e01);
    EXPECT_EQ(b.members[1 * 3 + 2], e12);
    EXPECT_TRUE(verify_ueb(b).valid);

    auto one = shift_and_multiply(cyclic_latin(1), HadamardSequence::constant(fourier_hadamard(1)));
    ASSERT_EQ(one.members.size(), 1u);
    EXPECT_TRUE(one.members[0].is_identity());
}

TEST(Ueb, ShiftAndMultiplyFamilies) {
    std::mt19937 rng(2);
    for (int d = 2; d <= 5; ++d) {
        LatinSquare l = cyclic_latin(d);
        auto b = shift_and_multiply(l, HadamardSequence::constant(fourier_hadamard(d)));
        EXPECT_TRUE(verify_ueb(b).valid) << d;
        EXPECT_TRUE(monomiality_report(b.members).is_monomial);
        // Row-permuted Latin square.
        std::vector<int> order(static_cast<std::size_t>(d));
        for (int i = 0; i < d; ++i) order[static_cast<std::size_t>(i)] = i;
        std::shuffle(order.begin(), order.end(), rng);
        LatinSquare p{d, {}};
        for (int i : order) {
            for (int j = 0; j < d; ++j) p.cells.push_back(l(i, j));
        }
        auto bp = shift_and_multiply(p, HadamardSequence::constant(fourier_hadamard(d)));
        EXPECT_TRUE(verify_ueb(bp).valid) << d;
    }
    auto alpha = make_alphabet({"t"});
    auto ba = shift_and_multiply(cyclic_latin(4), HadamardSequence::constant(h_alpha(alpha)));
    EXPECT_EQ(ba.members.size(), 16u);
    EXPECT_TRUE(verify_ueb(ba).valid);
    EXPECT_THROW(shift_and_multiply(latin_from_rows({{0, 1}, {0, 1}}), HadamardSequence::constant(fourier_hadamard(2))), std::invalid_argument);
}

TEST(Ueb, PauliBasisMatchesShiftAndMultiply) {
    // E_d is a shift-and-multiply basis up to member scalars.
    for (int d : {2, 3, 4}) {
        auto sam = shift_and_multiply(cyclic_latin(d), HadamardSequence::constant(fourier_hadamard(d)));
        auto pb = pauli_basis(d);
        for (const auto& m : sam.members) {
            bool found = false;
            for (const auto& p : pb.members) found = found || m.scalar_ratio(p).has_value();
            EXPECT_TRUE(found);
        }
    }
}

TEST(Ueb, NormalizeD2Identity) {
    auto n = normalize_d2(from_members(pauli_set()));
    EXPECT_TRUE(n.a.is_identity());
    EXPECT_TRUE(n.b.is_identity());
    for (std::size_t k = 0; k < 4; ++k) {
        EXPECT_TRUE(n.c[k].is_one());
        EXPECT_EQ(n.sigma[k], k);
    }
}

TEST(Ueb, NormalizeD2HalfPhase) {
    PhasedScalar a = PhasedScalar::zeta(8, 2);
    auto basis = from_members({ExactMatrix::identity(2), ExactMatrix::diagonal({1, -1}), antidiag(1, a), antidiag(1, -a)});
    auto n = normalize_d2(basis);
    EXPECT_EQ(n.a, ExactMatrix::diagonal({1, PhasedScalar::zeta(8, -1)}));
    for (std::size_t k = 0; k < 4; ++k) EXPECT_EQ(undo(n, k), basis.members[k]);
}

TEST(Ueb, NormalizeD2RoundTrips) {
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<int> e(0, 11);
    for (int rep = 0; rep < 10; ++rep) {
        ExactMatrix u = random_monomial(rng), v = random_monomial(rng);
        std::vector<ExactMatrix> ms;
        for (const auto& p : pauli_set()) ms.push_back((u * p * v).times(PhasedScalar::zeta(12, e(rng))));
        std::shuffle(ms.begin(), ms.end(), rng);
        auto basis = from_members(ms);
        auto n = normalize_d2(basis);
        for (std::size_t k = 0; k < 4; ++k) {
            EXPECT_EQ((n.a * ms[k] * n.b).times(n.c[k]), pauli_set()[n.sigma[k]]);
            EXPECT_EQ(undo(n, k), ms[k]);
        }
    }
    // No member becomes diagonal: needs the eigenvector path.
    ExactMatrix w(2, 2, {1, 2, -2, 1});
    std::vector<ExactMatrix> ms;
    for (const auto& p : pauli_set()) ms.push_back(w * p * w.inverse());
    auto n = normalize_d2(from_members(ms));
    for (std::size_t k = 0; k < 4; ++k) EXPECT_EQ(undo(n, k), ms[k]);
}

TEST(Ueb, NormalizeD2DenseEquivalence) {
    // Eigenvectors here have norms like 2 + sqrt 2, which are not rational.
    const ExactMatrix h(2, 2, {1, 1, 1, -1});
    const ExactMatrix a = h * ExactMatrix::diagonal({1, PhasedScalar::zeta(8, 1)});
    const ExactMatrix b = ExactMatrix::diagonal({PhasedScalar::zeta(8, 3), 1}) * h;
    std::vector<ExactMatrix> ms;
    for (const auto& p : pauli_set()) ms.push_back(a * p * b);
    auto n = normalize_d2(from_members(ms));
    for (std::size_t k = 0; k < 4; ++k) {
        EXPECT_EQ((n.a * ms[k] * n.b).times(n.c[k]), pauli_set()[n.sigma[k]]);
        EXPECT_EQ(undo(n, k), ms[k]);
    }
}

TEST(Ueb, NormalizeD2Rejects) {
    auto alpha = make_alphabet({"t"});
    PhasedScalar t = PhasedScalar::symbol(alpha, "t");
    auto odd = from_members({ExactMatrix::identity(2), ExactMatrix::diagonal({1, -1}), antidiag(1, t), antidiag(1, -t)});
    EXPECT_THROW(normalize_d2(odd), std::domain_error);
    PhasedScalar t2 = PhasedScalar::symbol(alpha, "t", 2);
    auto even = from_members({ExactMatrix::identity(2), ExactMatrix::diagonal({1, -1}), antidiag(1, t2), antidiag(1, -t2)});
    auto n = normalize_d2(even);
    EXPECT_EQ(n.a, ExactMatrix::diagonal({1, t.inverse()}));
    auto p = pauli_set();
    EXPECT_THROW(normalize_d2(from_members({p[0], p[1], p[1], p[3]})), std::invalid_argument);
}

TEST(Ueb, WickednessWitness) {
    auto alpha = make_alphabet({"t"});
    PhasedScalar t = PhasedScalar::symbol(alpha, "t");
    auto b = shift_and_multiply(cyclic_latin(4), HadamardSequence::constant(h_alpha(alpha)));
    auto w = wickedness_witness(b);
    ASSERT_TRUE(w.has_value());
    EXPECT_EQ(w->diagonal, (std::vector<PhasedScalar>{1, -1, t, -t}));
    EXPECT_EQ(w->offending_ratio, t);
    EXPECT_EQ(w->first, 8u);
    EXPECT_EQ(w->second, 0u);
    // Invariant under rescaling members.
    auto scaled = b;
    for (std::size_t k = 0; k < scaled.members.size(); ++k) scaled.members[k] = scaled.members[k].times(PhasedScalar::zeta(7, static_cast<int>(k)));
    auto ws = wickedness_witness(scaled);
    ASSERT_TRUE(ws.has_value());
    EXPECT_EQ(ws->offending_ratio, t);

    for (int d : {2, 3, 4, 5}) EXPECT_FALSE(wickedness_witness(pauli_basis(d)).has_value());
    ExactMatrix hi = substitute(h_alpha(alpha), "t", Cyclotomic::zeta(4));
    EXPECT_FALSE(wickedness_witness(shift_and_multiply(cyclic_latin(4), HadamardSequence::constant(hi))).has_value());
}
