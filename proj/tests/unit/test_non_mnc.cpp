#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "spt/non_mnc.hpp"

using namespace spt;

TEST(CentralExtension, LabelsRoundTrip) {
    const CentralExtension ext(2, 3);
    std::set<int> seen;
    for (int l = 0; l < 2; ++l)
        for (int f = 0; f < 9; ++f)
            for (int r = 0; r < 2; ++r) {
                const int lab = ext.label(l, f, r);
                EXPECT_EQ(ext.flavour_of(lab), f);
                seen.insert(lab);
            }
    EXPECT_EQ(static_cast<int>(seen.size()), ext.site_dim());
}

TEST(CentralExtension, ProjectionsAreHomomorphisms) {
    for (auto [p, q] : {std::pair{2, 3}, std::pair{3, 2}}) {
        const CentralExtension ext(p, q);
        const auto& G = ext.group();
        for (int a = 0; a < G.order(); ++a) {
            for (int b = 0; b < G.order(); ++b)
                EXPECT_EQ(ext.pi(G.add(a, b)), ext.quotient().add(ext.pi(a), ext.pi(b)));
        }
        for (int c = 0; c < ext.center().order(); ++c) EXPECT_EQ(ext.pi(ext.iota(c)), 0);
    }
}

TEST(CentralExtension, PairRepresentationIsLinear) {
    for (auto [p, q] : {std::pair{2, 3}, std::pair{3, 2}, std::pair{2, 2}}) {
        const CentralExtension ext(p, q);
        EXPECT_EQ(ext.extension_violations(), 0);
        EXPECT_LT(ext.linearity_defect(), 1e-12);
        EXPECT_LT(ext.eigenvalue_multiset_defect(), 1e-12);
    }
}

TEST(CentralExtension, StringPhaseIsOneAtTrivialAnchor) {
    const CentralExtension ext(2, 3);
    for (int g = 0; g < 4; ++g) EXPECT_NEAR(std::abs(ext.string_phase(g, 0, 1, 4) - 1.0), 0.0, 1e-14);
}

TEST(RemainderRemoval, PlusSignRestoresSymmetryForOddQuotient) {
    const CentralExtension ext(3, 2);
    const SptModel quotient(ext.quotient_factor_set());
    const auto& G = ext.group();
    double plus_worst = 0, minus_worst = 0;
    for (int h = 1; h < G.order(); ++h) {
        MpsChain c = general_reference_chain(ext, 3);
        c.apply_site(ext.X(h), 0);
        c.apply_site(ext.X(G.neg(h)), 1);
        plus_worst = std::max(plus_worst, remove_remainder(ext, quotient, c, 5, RemainderSign::Plus).symmetry_defect);
        minus_worst = std::max(minus_worst, remove_remainder(ext, quotient, c, 5, RemainderSign::Minus).symmetry_defect);
    }
    EXPECT_LT(plus_worst, 1e-10);
    EXPECT_GT(minus_worst, 0.1);
}
