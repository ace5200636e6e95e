#include <gtest/gtest.h>

#include <random>

#include <Eigen/Eigenvalues>

#include "spt/lanczos.hpp"

using namespace spt;

TEST(Lanczos, MatchesDenseEigensolver) {
    std::mt19937_64 rng(8);
    std::normal_distribution<double> N(0, 1);
    const int n = 300;
    cmat A(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) A(i, j) = cplx(N(rng), N(rng));
    const cmat H = (A + A.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<cmat> es(H);
    const LanczosResult r = lanczos_with_gap(n, [&](const cvec& in, cvec& out) { out = H * in; });
    EXPECT_NEAR(r.energy, es.eigenvalues()(0), 1e-8);
    EXPECT_NEAR(r.second, es.eigenvalues()(1), 1e-6);
    EXPECT_LT((H * r.vector - r.energy * r.vector).norm(), 1e-8);
}

TEST(Lanczos, FlagsDegenerateGroundSpace) {
    cvec d(6);
    d << -1, -1, 0, 1, 2, 3;
    const LanczosResult r = lanczos_with_gap(6, [&](const cvec& in, cvec& out) { out = d.cwiseProduct(in); });
    EXPECT_NEAR(r.energy, -1.0, 1e-10);
    EXPECT_TRUE(r.degenerate);
}
