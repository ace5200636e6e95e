#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "spt/conv_gate.hpp"
#include "spt/error_flow.hpp"

using namespace spt;

TEST(Majority, TieBreakKeepsCentre) {
    EXPECT_EQ(maj(1, 1, 0), 1);
    EXPECT_EQ(maj(0, 2, 0), 0);
    EXPECT_EQ(maj(0, 2, 2), 2);
    EXPECT_EQ(maj(0, 1, 2), 1);
}

TEST(Majority, BlockwiseOnTriples) {
    EXPECT_EQ(blockwise_maj({0, 1, 1, 2, 3, 2, 0, 1, 3}), (std::vector<int>{1, 2, 1}));
}

TEST(Flow, BinaryIidMatchesClosedForm) {
    // p' = p^3 + 3 p^2 (1 - p) for two labels
    for (double p : {0.1, 0.4, 0.55, 0.9}) {
        const auto q = maj_flow_step(iid_table3({p, 1 - p}), 2);
        EXPECT_NEAR(q[0], p * p * p + 3 * p * p * (1 - p), 1e-15);
        EXPECT_NEAR(q[0] + q[1], 1.0, 1e-15);
    }
}

TEST(Flow, CentreMarginalOfIidIsInput) {
    const std::vector<double> p = {0.5, 0.2, 0.3};
    const auto c = centre_marginal(iid_table3(p), 3);
    for (int g = 0; g < 3; ++g) EXPECT_NEAR(c[g], p[g], 1e-15);
}

TEST(Flow, RejectsUnnormalisedTable) {
    EXPECT_THROW(maj_flow_step(std::vector<double>(8, 0.2), 2), std::invalid_argument);
}

TEST(Flow, TopTwoOrdersByProbability) {
    EXPECT_EQ(top_two({0.1, 0.5, 0.4}), std::make_pair(1, 2));
}

TEST(ErrorModels, IidSamplerMarginals) {
    const auto m = make_iid_model({0.7, 0.3});
    std::mt19937_64 rng(5);
    int ones = 0;
    const int L = 200000;
    for (int x : m->sample(L, rng)) ones += x;
    EXPECT_NEAR(ones / double(L), 0.3, 5 * std::sqrt(0.21 / L));
}

TEST(ErrorModels, MarkovKeepsStationaryMarginal) {
    const auto m = make_markov_model({0.6, 0.4}, 3.0);
    std::mt19937_64 rng(6);
    int ones = 0, same = 0;
    const int L = 200000;
    const auto s = m->sample(L, rng);
    for (int i = 0; i < L; ++i) {
        ones += s[i];
        if (i > 0) same += s[i] == s[i - 1];
    }
    EXPECT_NEAR(ones / double(L), 0.4, 0.01);
    // P(same) = e^{-1/xi} + (1 - e^{-1/xi}) sum p^2
    const double k = std::exp(-1.0 / 3.0);
    EXPECT_NEAR(same / double(L - 1), k + (1 - k) * 0.52, 0.01);
}

TEST(ErrorModels, SamplingIsSeeded) {
    const auto m = make_gerrymander_model(4, 0, 0.9);
    const auto a = sample_triples(*m, 5000, 11), b = sample_triples(*m, 5000, 11);
    EXPECT_EQ(a.count0, b.count0);
    EXPECT_EQ(a.count1, b.count1);
}
