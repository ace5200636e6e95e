#include <gtest/gtest.h>

#include <cmath>

#include "spt/config.hpp"
#include "spt/experiment.hpp"

using namespace spt;

TEST(Config, ParsesKeysCommentsAndDefaults) {
    const RunConfig c = parse_config("# a comment\nkind = \"recognize\"\nseed = 42\nL = 27\nerrors = []\n");
    EXPECT_EQ(c.kind, "recognize");
    EXPECT_EQ(c.seed, 42u);
    EXPECT_EQ(c.L, 27);
    EXPECT_EQ(c.depth, 1);
}

TEST(Config, RejectsUnknownDuplicateAndMissingKeys) {
    EXPECT_THROW(parse_config("kind = \"flow\"\nseed = 1\nbogus = 2\n"), config_error);
    EXPECT_THROW(parse_config("kind = \"flow\"\nseed = 1\nseed = 2\n"), config_error);
    EXPECT_THROW(parse_config("kind = \"flow\"\n"), config_error);
}

TEST(Config, CollectsEveryProblem) {
    try {
        parse_config("bogus = 1\nother = 2\n");
        FAIL();
    } catch (const config_error& e) {
        EXPECT_GE(e.problems().size(), 4u);
    }
}

TEST(Config, ValidationNamesTheProblem) {
    auto load = [](const std::string& text) { validate_config(parse_config(text)); };
    try {
        load("kind = \"recognize\"\nseed = 1\nmoduli = [3]\nomega = [[0, 1, 1]]\n");
        FAIL();
    } catch (const config_error& e) {
        EXPECT_NE(std::string(e.what()).find("cyclic group"), std::string::npos);
    }
    EXPECT_THROW(load("kind = \"recognize\"\nseed = 1\nL = 10\n"), config_error);
    EXPECT_THROW(load("kind = \"recognize\"\nseed = 1\nmoduli = [4, 4]\nomega = [[0, 1, 2]]\n"), config_error);
}

TEST(Config, CapsAreSeparateFromInvalidInput) {
    EXPECT_THROW(validate_config(parse_config("kind = \"recognize\"\nseed = 1\nmoduli = [3, 3]\nL = 2187\ndepth = 2\n")),
                 cap_error);
}

TEST(Config, SerialisationRoundTrips) {
    const RunConfig c = parse_config("kind = \"sweep\"\nseed = 9\nlambda1 = [0, 0.5]\nLG = 3\n");
    const std::string text = serialize_config(c);
    EXPECT_EQ(serialize_config(parse_config(text)), text);
}

TEST(Artifacts, NumberFormatting) {
    EXPECT_EQ(format_number(0.0), "0");
    EXPECT_EQ(format_number(-0.0), "0");
    EXPECT_EQ(format_number(0.1), "0.1");
    EXPECT_EQ(format_number(1.0 / 3.0), "0.333333333333333");
    EXPECT_EQ(format_number(std::nan("")), "nan");
}

TEST(Artifacts, Fnv1aReferenceVectors) {
    EXPECT_EQ(fnv1a(""), 0xcbf29ce484222325ULL);
    EXPECT_EQ(fnv1a("a"), 0xaf63dc4c8601ec8cULL);
    EXPECT_EQ(hex64(0xabcULL), "0000000000000abc");
}

TEST(Artifacts, FlowRunIsReproducible) {
    const RunConfig c = parse_config("kind = \"flow\"\nseed = 3\np = [0.7, 0.3]\ndepth = 2\ntrials = 2000\n");
    const RunResult a = run_experiment(c), b = run_experiment(c);
    EXPECT_EQ(to_csv(a), to_csv(b));
    EXPECT_EQ(a.summary, b.summary);
    EXPECT_EQ(a.header.front(), "depth");
}
