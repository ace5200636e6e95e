#include <gtest/gtest.h>

#include <cmath>

#include "spt/conv_gate.hpp"
#include "spt/recognition.hpp"
#include "spt/ssb.hpp"

using namespace spt;

TEST(Recognition, SampleComplexityIsSmallestSeparatingCount) {
    for (int n : {2, 3, 4})
        for (double S : {0.05, 0.3, 0.8, 1.0})
            for (double delta : {2.0, 3.0}) {
                const double p = (1.0 + (n - 1) * S) / n;
                int M = 1;
                while (!(p - delta * std::sqrt(p * (1 - p) / M) > 1.0 / n - 1e-12)) ++M;
                EXPECT_EQ(sample_complexity(S, delta, n), M) << n << " " << S << " " << delta;
            }
    EXPECT_EQ(sample_complexity(0.0, 3.0, 2), -1);
}

TEST(Recognition, ElementOrder) {
    const FiniteAbelianGroup G({4, 6});
    EXPECT_EQ(element_order(G, 0), 1);
    EXPECT_EQ(element_order(G, G.index({2, 0})), 2);
    EXPECT_EQ(element_order(G, G.index({1, 4})), 12);
}

TEST(Recognition, DecisionThresholds) {
    RecognitionOptions o;
    EXPECT_EQ(decide(0.95, o), Decision::InPhase);
    EXPECT_EQ(decide(1e-9, o), Decision::OutOfPhase);
    EXPECT_EQ(decide(0.05, o), Decision::Inconclusive);
}

TEST(Recognition, DomainWallRoundTrip) {
    const FactorSet fs = FactorSet::zn2(3, 1);
    const std::vector<int> e = {0, 4, 4, 7, 0, 2};
    EXPECT_EQ(domain_walls_to_errors(fs, errors_to_domain_walls(fs, e)), e);
}

TEST(Recognition, DisentanglerReadsErrorsAsDomainWalls) {
    const SptModel m(FactorSet::zn2(2, 1));
    const std::vector<int> e = {0, 1, 1, 3};
    const DenseState out = apply_disentangler(m, prepare_with_errors(m.fs(), 4, e));
    const auto walls = errors_to_domain_walls(m.fs(), e);
    EXPECT_NEAR(std::norm(out.amplitudes()[out.index(walls)]), 1.0, 1e-10);
}

TEST(Recognition, ReferenceIsRecognisedAtEveryDepth) {
    const SptModel m(FactorSet::zn2(2, 1));
    const cmat C = conv_gate(m).C;
    const RecognitionReport r = recognize(reference_dense(m.fs(), 9), m, C, 1);
    ASSERT_EQ(r.depths.size(), 2u);
    for (const auto& d : r.depths) EXPECT_NEAR(std::abs(d.mso - 1.0), 0.0, 1e-10);
    EXPECT_EQ(r.decision, Decision::InPhase);
}

TEST(Ssb, GateRealisesClassicalTable) {
    for (const auto& mod : std::vector<std::vector<int>>{{2}, {3}, {2, 2}}) {
        const FiniteAbelianGroup G(mod);
        const SsbGate g = ssb_gate(G);
        EXPECT_EQ(ssb_truth_table_mismatches(G, g.C), 0);
        EXPECT_LT(ssb_symmetry_defect(G, g.C), 1e-12);
        EXPECT_LT(unitarity_defect(g.C), 1e-12);
    }
}

TEST(Ssb, OrderedStateFidelityGrowsWithDepth) {
    const FiniteAbelianGroup G({2});
    DenseState s = ordered_state_with_flips(G, 9, 1, 0.1);
    const double f0 = renormalised_fidelity(s, make_layout(9, 2), 0, 1);
    const LegLayout lay = run_ssb(s, G, 2);
    EXPECT_GT(renormalised_fidelity(s, lay, 2, 1), f0);
}
