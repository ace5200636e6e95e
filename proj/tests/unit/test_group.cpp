#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <set>

#include "spt/group.hpp"

using namespace spt;

TEST(Phase, ReducesAndMultiplies) {
    const Phase a(1, 4), b(3, 4);
    EXPECT_EQ(a * b, Phase(0, 1));
    EXPECT_EQ(a.pow(2), Phase(1, 2));
    EXPECT_EQ(a.conj(), b);
    EXPECT_NEAR(std::abs(a.value() - std::complex<double>(0, 1)), 0.0, 1e-15);
}

TEST(FiniteAbelianGroup, IndexRoundTripAndArithmetic) {
    const FiniteAbelianGroup G({2, 3, 4});
    ASSERT_EQ(G.order(), 24);
    for (int g = 0; g < G.order(); ++g) {
        EXPECT_EQ(G.index(G.residues(g)), g);
        EXPECT_EQ(G.add(g, G.neg(g)), 0);
        for (int h = 0; h < G.order(); ++h) {
            const auto a = G.residues(g), b = G.residues(h), s = G.residues(G.add(g, h));
            for (int i = 0; i < 3; ++i) EXPECT_EQ(s[i], (a[i] + b[i]) % G.moduli()[i]);
        }
    }
}

TEST(FiniteAbelianGroup, CharacterIsBihomomorphic) {
    const FiniteAbelianGroup G({3, 3});
    for (int a = 0; a < 9; ++a)
        for (int b = 0; b < 9; ++b)
            for (int c = 0; c < 9; ++c) EXPECT_EQ(G.character(G.add(a, b), c), G.character(a, c) * G.character(b, c));
}

// Closed form for Z_N x Z_N: omega(g, h) = zeta^{w g_2 h_1}, Gamma(g) = w (-g_2, g_1).
TEST(FactorSet, MatchesClosedFormOnZN2) {
    for (int N : {2, 3, 4, 5})
        for (int w = 1; w < N; ++w) {
            const FactorSet fs = FactorSet::zn2(N, w);
            const auto& G = fs.group();
            for (int g = 0; g < G.order(); ++g) {
                const auto r = G.residues(g);
                for (int h = 0; h < G.order(); ++h) {
                    const auto s = G.residues(h);
                    EXPECT_EQ(fs.omega(g, h), Phase(w * r[1] * s[0], N));
                }
                if (fs.is_mnc()) {
                    const int want = G.index({((-w * r[1]) % N + N) % N, (w * r[0]) % N});
                    EXPECT_EQ(fs.gamma(g), want);
                    EXPECT_EQ(fs.gamma_inverse(fs.gamma(g)), g);
                }
            }
        }
}

TEST(FactorSet, CenterSizeFollowsGcd) {
    for (int N : {4, 6})
        for (int w = 0; w < N; ++w) {
            const FactorSet fs = FactorSet::zn2(N, w);
            const int g = gcd_int(N, w == 0 ? N : w);
            EXPECT_EQ(static_cast<int>(fs.center().size()), g * g) << "N=" << N << " w=" << w;
            EXPECT_EQ(fs.is_mnc(), g == 1);
        }
}

TEST(NumberTheory, ModInverse) {
    for (int n : {5, 7, 9, 12})
        for (int a = 1; a < n; ++a)
            if (gcd_int(a, n) == 1) EXPECT_EQ((a * mod_inverse(a, n)) % n, 1);
}
