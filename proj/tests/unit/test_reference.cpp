#include <gtest/gtest.h>

#include "spt/dense_state.hpp"
#include "spt/recognition.hpp"
#include "spt/reference.hpp"

using namespace spt;

TEST(Reference, TransferMatrixMatchesDense) {
    const FactorSet fs = FactorSet::zn2(3, 1);
    const SptModel m(fs);
    const DenseState psi = reference_dense(fs, 5);
    const std::vector<SiteTensor> T(5, reference_site_tensor(fs));
    for (int g = 1; g < 9; ++g) {
        const auto ops = string_operator(m, g, 1, 3, 5);
        EXPECT_LT(std::abs(string_expectation_tm(T, ops) - psi.product_expectation(ops)), 1e-12);
    }
}

TEST(Reference, StateIsSymmetricAndStabilisedByParentTerms) {
    const FactorSet fs = FactorSet::zn2(2, 1);
    const SptModel m(fs);
    const DenseState psi = reference_dense(fs, 6);
    EXPECT_NEAR(psi.norm(), 1.0, 1e-12);
    for (int g = 1; g < 4; ++g) {
        std::vector<LocalOp> all;
        for (int i = 0; i < 6; ++i) all.emplace_back(i, regular_rep(fs.group(), g));
        EXPECT_NEAR(std::abs(psi.product_expectation(all) - 1.0), 0.0, 1e-12);
    }
    // Every parent term is -|G| P with P a projector that fixes the state.
    EXPECT_NEAR(psi.expectation(parent_term(m), {2, 3}).real(), -4.0, 1e-12);
}

TEST(Reference, ErrorsAreOrthogonal) {
    const FactorSet fs = FactorSet::zn2(2, 1);
    const DenseState a = prepare_with_errors(fs, 4, {0, 1, 0, 0});
    const DenseState b = prepare_with_errors(fs, 4, {0, 2, 0, 0});
    EXPECT_LT(std::abs(a.overlap(b)), 1e-12);
}
