#include <gtest/gtest.h>

#include <random>

#include "spt/dense_state.hpp"
#include "spt/mps_chain.hpp"
#include "spt/recognition.hpp"

using namespace spt;

namespace {

cmat random_unitary(int n, std::mt19937_64& rng) {
    std::normal_distribution<double> N(0, 1);
    cmat m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = cplx(N(rng), N(rng));
    Eigen::HouseholderQR<cmat> qr(m);
    return qr.householderQ();
}

// Reference action of an operator on chosen sites: full kron with identities and a permutation.
cvec apply_full(const cvec& v, int d, int L, const cmat& op, int site) {
    std::vector<cmat> f(L, cmat::Identity(d, d));
    f[site] = op;
    return kron_all(f) * v;
}

}  // namespace

TEST(DenseState, SingleSiteMatchesKron) {
    std::mt19937_64 rng(1);
    DenseState s(3, 4);
    s.amplitudes() = cvec::Random(81).normalized();
    const cvec before = s.amplitudes();
    const cmat U = random_unitary(3, rng);
    s.apply_local(U, {2});
    EXPECT_LT((s.amplitudes() - apply_full(before, 3, 4, U, 2)).norm(), 1e-13);
}

TEST(DenseState, DigitsAreSiteZeroMostSignificant) {
    const DenseState s(3, 3);
    EXPECT_EQ(s.index({1, 0, 2}), 11u);
    EXPECT_EQ(s.digits(11), (std::vector<int>{1, 0, 2}));
}

TEST(MpsChain, AgreesWithDenseOnReference) {
    const FactorSet fs = FactorSet::zn2(2, 1);
    MpsChain c = reference_chain(fs, 6);
    DenseState d = reference_dense(fs, 6);
    std::mt19937_64 rng(2);
    const cmat U = random_unitary(16, rng);
    c.apply_local(U, {1, 4});
    d.apply_local(U, {1, 4});
    EXPECT_NEAR(std::abs(c.to_dense().overlap(d)), 1.0, 1e-10);
    const std::vector<LocalOp> ops = {{0, projector(4, 1)}, {5, projector(4, 3)}};
    EXPECT_LT(std::abs(c.product_expectation(ops) - d.product_expectation(ops)), 1e-12);
}

TEST(MpsChain, ReducedDensityMatchesPartialTrace) {
    const FactorSet fs = FactorSet::zn2(2, 1);
    MpsChain c = reference_chain(fs, 5);
    std::mt19937_64 rng(3);
    c.apply_local(random_unitary(16, rng), {0, 1});
    c.apply_local(random_unitary(16, rng), {2, 3});
    const DenseState d = c.to_dense();
    const std::vector<int> keep = {0, 2, 4};
    const cmat rho = c.reduced_density(keep);
    ASSERT_EQ(rho.rows(), 64);
    cmat want = cmat::Zero(64, 64);
    for (std::size_t a = 0; a < d.size(); ++a)
        for (std::size_t b = 0; b < d.size(); ++b) {
            const auto x = d.digits(a), y = d.digits(b);
            if (x[1] != y[1] || x[3] != y[3]) continue;
            want((x[0] * 4 + x[2]) * 4 + x[4], (y[0] * 4 + y[2]) * 4 + y[4]) +=
                d.amplitudes()[a] * std::conj(d.amplitudes()[b]);
        }
    EXPECT_LT(max_abs(rho - want), 1e-12);
}

TEST(MpsChain, ProductStateMeasurementIsDeterministic) {
    MpsChain c = MpsChain::product(3, {2, 0, 1});
    std::mt19937_64 rng(4);
    EXPECT_EQ(c.measure(0, {0, 1, 2}, 3, rng), 2);
    EXPECT_EQ(c.measure(2, {0, 1, 2}, 3, rng), 1);
}
