#include <gtest/gtest.h>

#include <cmath>

#include "spt/linalg.hpp"

using namespace spt;

TEST(Linalg, ClockShiftCommutation) {
    const int N = 5;
    const cplx z = std::polar(1.0, 2 * std::acos(-1.0) / N);
    const cmat Z = clock_pow(N, 1), X = shift_pow(N, 1);
    EXPECT_LT(max_abs(Z * X - z * X * Z), 1e-14);
    EXPECT_LT(max_abs(clock_pow(N, N) - cmat::Identity(N, N)), 1e-14);
    EXPECT_LT(unitarity_defect(X), 1e-15);
}

TEST(Linalg, KronEntries) {
    cmat a(2, 2), b(3, 1);
    a << 1, 2, 3, 4;
    b << 5, 6, 7;
    const cmat k = kron(a, b);
    ASSERT_EQ(k.rows(), 6);
    ASSERT_EQ(k.cols(), 2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int r = 0; r < 3; ++r) EXPECT_EQ(k(3 * i + r, j), a(i, j) * b(r, 0));
}

TEST(Linalg, PermuteFactorsSwapsTensorLegs) {
    const cmat a = cmat::Random(3, 3), b = cmat::Random(3, 3);
    EXPECT_LT(max_abs(permute_factors(kron(a, b), 3, {1, 0}) - kron(b, a)), 1e-14);
}

TEST(Linalg, ProjectorAndPow) {
    EXPECT_EQ(projector(4, 2)(2, 2), cplx(1.0));
    EXPECT_EQ(projector(4, 2).cwiseAbs().sum(), 1.0);
    EXPECT_EQ(ipow(3, 5), 243);
}
