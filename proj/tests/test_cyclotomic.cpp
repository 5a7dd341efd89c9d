#include <gtest/gtest.h>

#include "uebkit/cyclotomic.hpp"

using uebkit::Cyclotomic;
using uebkit::IntPolynomial;
using uebkit::Rational;

namespace {

// Naive cyclotomic polynomial via x^n - 1 = prod_{d | n} Phi_d, independent of
// the library's own construction.
IntPolynomial reference_phi(int n) {
    IntPolynomial p(static_cast<std::size_t>(n) + 1, 0);
    p[0] = -1;
    p[static_cast<std::size_t>(n)] = 1;
    for (int d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        IntPolynomial q = reference_phi(d);
        IntPolynomial quot(p.size() - q.size() + 1, 0);
        for (int i = static_cast<int>(p.size()) - 1; i >= static_cast<int>(q.size()) - 1; --i) {
            std::int64_t c = p[static_cast<std::size_t>(i)];
            if (c == 0) continue;
            std::size_t shift = static_cast<std::size_t>(i) - (q.size() - 1);
            quot[shift] = c;
            for (std::size_t j = 0; j < q.size(); ++j) p[shift + j] -= c * q[j];
        }
        p = quot;
    }
    return p;
}

}  // namespace

TEST(CyclotomicPolynomial, SmallOrders) {
    EXPECT_EQ(uebkit::cyclotomic_polynomial(1), (IntPolynomial{-1, 1}));
    EXPECT_EQ(uebkit::cyclotomic_polynomial(4), (IntPolynomial{1, 0, 1}));
    EXPECT_EQ(uebkit::cyclotomic_polynomial(6), (IntPolynomial{1, -1, 1}));
}

TEST(CyclotomicPolynomial, MatchesReference) {
    for (int n : {2, 3, 5, 8, 9, 12, 15, 30, 33, 55, 105}) {
        EXPECT_EQ(uebkit::cyclotomic_polynomial(n), reference_phi(n)) << "n=" << n;
    }
}

TEST(Cyclotomic, RootsOfUnityIdentities) {
    Cyclotomic z3 = Cyclotomic::zeta(3);
    EXPECT_TRUE((Cyclotomic(1) + z3 + z3 * z3).is_zero());
    EXPECT_EQ(Cyclotomic::zeta(4).pow(2), Cyclotomic(-1));
    Cyclotomic sum;
    for (int k = 0; k < 8; ++k) sum += Cyclotomic::zeta(8, k);
    EXPECT_TRUE(sum.is_zero());
    EXPECT_EQ(Cyclotomic::zeta(5, 7), Cyclotomic::zeta(5, 2));
    EXPECT_EQ(Cyclotomic::zeta(5, -1), Cyclotomic::zeta(5, 4));
}

TEST(Cyclotomic, Orders) {
    EXPECT_EQ(Cyclotomic::zeta(6).root_of_unity_order(), 6);
    EXPECT_EQ((-Cyclotomic::zeta(5, 3)).root_of_unity_order(), 10);
    EXPECT_EQ(Cyclotomic(-1).root_of_unity_order(), 2);
    EXPECT_EQ(Cyclotomic(1).root_of_unity_order(), 1);
    EXPECT_EQ(Cyclotomic(2).root_of_unity_order(), std::nullopt);
    Cyclotomic z5 = Cyclotomic::zeta(5);
    EXPECT_EQ((z5 + z5.conj()).root_of_unity_order(), std::nullopt);
    EXPECT_THROW(Cyclotomic(0).root_of_unity_order(), std::domain_error);
    // zeta_12^3 = i has order 4 even though it lives in order 12.
    EXPECT_EQ(Cyclotomic::zeta(12, 3).root_of_unity_order(), 4);
}

TEST(Cyclotomic, MixedOrdersPromote) {
    Cyclotomic i = Cyclotomic::zeta(4);
    Cyclotomic w = Cyclotomic::zeta(3);
    Cyclotomic p = i * w;
    EXPECT_EQ(p.order(), 12);
    EXPECT_EQ(p, Cyclotomic::zeta(12, 7));
}

TEST(Cyclotomic, InverseConjAndNorm) {
    for (int n : {3, 5, 7, 8, 11, 15, 33}) {
        Cyclotomic a = Cyclotomic(2) + Cyclotomic::zeta(n) - Cyclotomic::zeta(n, 2).scaled(Rational(1, 3));
        EXPECT_EQ(a * a.inverse(), Cyclotomic(1)) << n;
        EXPECT_EQ(a.conj().conj(), a);
        Cyclotomic z = Cyclotomic::zeta(n, 2);
        EXPECT_EQ(z * z.conj(), Cyclotomic(1));
    }
    // N(1 - zeta_p) = p
    EXPECT_EQ((Cyclotomic(1) - Cyclotomic::zeta(7)).norm(), Rational(7));
    // sqrt(-3) = zeta_3 - zeta_3^2, |.|^2 = 3
    Cyclotomic s = Cyclotomic::zeta(3) - Cyclotomic::zeta(3, 2);
    EXPECT_EQ(s * s, Cyclotomic(-3));
    EXPECT_EQ(s * s.conj(), Cyclotomic(3));
}

TEST(Cyclotomic, AccumulatorMatchesNaiveSum) {
    uebkit::CyclotomicAccumulator acc(15);
    Cyclotomic naive;
    for (int k = 0; k < 20; ++k) {
        Cyclotomic a = Cyclotomic::zeta(5, k) + Cyclotomic(k);
        Cyclotomic b = Cyclotomic::zeta(3, 2 * k);
        acc.add_product(a, b);
        naive += a * b;
    }
    EXPECT_EQ(acc.finish(), naive);
}
