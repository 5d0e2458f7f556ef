#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "hyperstab/constructions.hpp"
#include "hyperstab/errors.hpp"
#include "hyperstab/harness.hpp"

namespace hs = hyperstab;

namespace {

nlohmann::ordered_json without_wall_time(const hs::VerificationReport& r) {
    auto j = hs::report_to_json(r);
    j.erase("wall_time");
    return j;
}

TEST(Report, JsonShapeAndKeyOrder) {
    hs::VerificationReport r;
    r.claim_id = "demo";
    r.params["n"] = 3;
    r.instances_tested = 5;
    r.seed = 9;
    auto j = hs::report_to_json(r);
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    EXPECT_EQ(keys, (std::vector<std::string>{"claim_id", "status", "params", "instances_tested",
                                              "skipped", "counterexamples", "notes", "seed",
                                              "wall_time"}));
    EXPECT_EQ(j["status"], "PASS");
}

TEST(RunTrials, MergesInIndexOrderAndCountsBudgetAsSkipped) {
    auto fn = [](long i) {
        if (i % 2 == 1) throw hs::BudgetError("stop");
        hs::detail::TrialOutcome out;
        out.tested = true;
        if (i == 2 || i == 6) {
            nlohmann::ordered_json v;
            v["index"] = i;
            out.violation = v;
        }
        return out;
    };
    for (int jobs : {1, 3}) {
        hs::VerificationReport rep;
        hs::detail::run_trials(10, jobs, rep, fn);
        EXPECT_EQ(rep.instances_tested, 5) << jobs;
        EXPECT_EQ(rep.skipped, 5) << jobs;
        ASSERT_EQ(rep.counterexamples.size(), 2u) << jobs;
        EXPECT_EQ(rep.counterexamples[0]["index"], 2) << jobs;
        EXPECT_EQ(rep.counterexamples[1]["index"], 6) << jobs;
    }
}

TEST(Decomposition, CompleteSplitsCleanly) {
    auto r = hs::verify_decomposition(3, 3);
    EXPECT_EQ(r.status, "PASS");
    EXPECT_TRUE(r.counterexamples.empty());
    auto r4 = hs::verify_decomposition(4, 2);
    EXPECT_EQ(r4.status, "PASS");
}

TEST(MaxIntersectingFamily, ExactValues) {
    EXPECT_EQ(hs::max_intersecting_family(2), 4);
    EXPECT_EQ(hs::max_intersecting_family(3), 9);
    EXPECT_THROW(hs::max_intersecting_family(4), hs::TooLargeError);
}

TEST(MatchingThreshold, ExhaustiveTwoTwo) {
    auto r = hs::verify_matching_threshold(2, 2, 0, 1);
    EXPECT_EQ(r.status, "PASS");
    EXPECT_EQ(r.instances_tested, 93);  // graphs on [2,2,2] with e > 4
    EXPECT_EQ(r.skipped, 163);
    EXPECT_THROW(hs::verify_matching_threshold(3, 2, 0, 1), hs::BadParamsError);
}

TEST(MatchingThreshold, SampledWithStarCheck) {
    auto r = hs::verify_matching_threshold(3, 2, 60, 7);
    EXPECT_EQ(r.status, "PASS");
    EXPECT_EQ(r.instances_tested, 60);
    ASSERT_FALSE(r.notes.empty());
    EXPECT_NE(r.notes[0].find("9"), std::string::npos);
}

TEST(RainbowThreshold, SampledWithTightControl) {
    auto r = hs::verify_rainbow_threshold(3, 2, 40, 11);
    EXPECT_EQ(r.status, "PASS");
    EXPECT_EQ(r.instances_tested, 40);
    ASSERT_FALSE(r.notes.empty());
    EXPECT_NE(r.notes[0].find("tight family"), std::string::npos);
}

TEST(TwoGraphRainbow, ExhaustiveCounts) {
    auto r2 = hs::verify_two_graph_rainbow(2);
    EXPECT_EQ(r2.status, "PASS");
    EXPECT_EQ(r2.instances_tested, 93);  // nonempty pairs with e1+e2 > 4
    EXPECT_EQ(r2.skipped, 256 - 93);
    EXPECT_THROW(hs::verify_two_graph_rainbow(4), hs::BadParamsError);
    EXPECT_THROW(hs::verify_two_graph_rainbow(1), hs::BadParamsError);
}

TEST(IntersectingStability, BoundaryCertifiedAndPasses) {
    auto r = hs::verify_intersecting_stability(5, 5, 5, 30, 3);
    EXPECT_EQ(r.status, "PASS");
    EXPECT_GT(r.instances_tested, 0);
    ASSERT_FALSE(r.notes.empty());
    EXPECT_NE(r.notes[0].find("boundary family certified"), std::string::npos);
    auto small = hs::verify_intersecting_stability(2, 2, 2, 10, 3);
    EXPECT_EQ(small.status, "EXPLORATORY");
}

TEST(ShiftMonotone, PassesOnRandoms) {
    auto r = hs::verify_shift_monotone(3, 12, 50, 5);
    EXPECT_EQ(r.status, "PASS");
    EXPECT_EQ(r.instances_tested, 50);
}

TEST(ShiftedStability, HypothesesMetMeansRefutable) {
    auto r = hs::verify_shifted_stability(4, 2, 40, 17);
    EXPECT_EQ(r.status, "PASS");
    EXPECT_GT(r.instances_tested, 0);
    auto expl = hs::verify_shifted_stability(3, 1, 10, 17);
    EXPECT_EQ(expl.status, "EXPLORATORY");  // m = 1 sits outside the lemma
    EXPECT_THROW(hs::verify_shifted_stability(3, 3, 10, 17), hs::BadParamsError);
}

TEST(MainStability, TightnessCertifiedExploratorySweep) {
    auto r = hs::verify_main_stability(4, 2, 20, 23);
    EXPECT_EQ(r.status, "EXPLORATORY");
    ASSERT_GE(r.notes.size(), 2u);
    EXPECT_NE(r.notes[0].find("tightness certified"), std::string::npos);
}

TEST(SmallMatchingStability, AlwaysExploratory) {
    auto r = hs::verify_small_matching_stability(4, 2, 15, 29);
    EXPECT_EQ(r.status, "EXPLORATORY");
    EXPECT_THROW(hs::verify_small_matching_stability(4, 1, 5, 29), hs::BadParamsError);
}

TEST(NearPerfectStability, AlwaysExploratory) {
    auto r = hs::verify_near_perfect_stability(4, 15, 31);
    EXPECT_EQ(r.status, "EXPLORATORY");
    EXPECT_EQ(r.params["m"], 3);
}

TEST(MinDegreePm, MetAndUnmetHypotheses) {
    auto r = hs::verify_min_degree_pm(3, 6, 25, 37);
    EXPECT_EQ(r.status, "PASS");
    EXPECT_EQ(r.instances_tested, 25);
    auto weak = hs::verify_min_degree_pm(3, 2, 10, 37);
    EXPECT_EQ(weak.status, "EXPLORATORY");
}

TEST(CensusSuite, AllRowsClean) {
    auto r = hs::verify_census();
    EXPECT_EQ(r.status, "PASS");
    EXPECT_EQ(r.instances_tested, 64);
    bool found = false;
    for (const auto& n : r.notes)
        if (n.find("total < 5") != std::string::npos) {
            EXPECT_NE(n.find("8"), std::string::npos);
            found = true;
        }
    EXPECT_TRUE(found);
}

TEST(ConjectureSearch, BaselineAndDeterminism) {
    auto r0 = hs::conjecture_search(3, 2, 0, 5);
    EXPECT_EQ(r0.status, "EXPLORATORY");
    EXPECT_EQ(r0.instances_tested, 0);
    ASSERT_FALSE(r0.notes.empty());
    EXPECT_NE(r0.notes[0].find("47"), std::string::npos);

    auto a = hs::conjecture_search(3, 2, 300, 5);
    auto b = hs::conjecture_search(3, 2, 300, 5);
    EXPECT_EQ(without_wall_time(a), without_wall_time(b));
    EXPECT_EQ(a.status, "EXPLORATORY");
    EXPECT_THROW(hs::conjecture_search(5, 2, 10, 5), hs::BadParamsError);
    EXPECT_THROW(hs::conjecture_search(3, 3, 10, 5), hs::BadParamsError);
}

TEST(SolverCrossCheck, ExhaustiveAndSampled) {
    auto r2 = hs::solver_cross_check(2, 8, 0, 1);
    EXPECT_EQ(r2.status, "PASS");
    EXPECT_EQ(r2.instances_tested, 256);

    auto r3 = hs::solver_cross_check(3, 12, 40, 1);
    EXPECT_EQ(r3.status, "PASS");
    EXPECT_EQ(r3.instances_tested, 40);
    EXPECT_THROW(hs::solver_cross_check(7, 10, 5, 1), hs::TooLargeError);
}

TEST(Jobs, ReportsAreIdenticalAcrossJobCounts) {
    auto a = hs::verify_shift_monotone(3, 10, 30, 77, 1);
    auto b = hs::verify_shift_monotone(3, 10, 30, 77, 3);
    EXPECT_EQ(without_wall_time(a), without_wall_time(b));

    auto c = hs::verify_matching_threshold(3, 2, 30, 77, 1);
    auto d = hs::verify_matching_threshold(3, 2, 30, 77, 4);
    EXPECT_EQ(without_wall_time(c), without_wall_time(d));
}

TEST(Archive, WriteAndRecheckRoundTrip) {
    // H_3(3,2) violates tau = m, which is exactly what a stability record
    // asserts; archive it and re-derive the violation from the file alone.
    auto h = hs::extremal_construction(3, 3, 2);
    hs::VerificationReport rep;
    rep.claim_id = "lem-3.1";
    rep.counterexamples.push_back(hs::detail::stability_violation("lem-3.1", h, 2, 15, 2, 3));

    auto dir = std::filesystem::temp_directory_path() / "hyperstab-archive-test";
    std::filesystem::remove_all(dir);
    auto files = hs::write_archive(rep, dir.string());
    ASSERT_EQ(files.size(), 1u);
    EXPECT_NE(files[0].find("lem-3.1-"), std::string::npos);
    EXPECT_EQ(files[0].substr(files[0].size() - 5), ".json");

    std::ifstream in(files[0]);
    nlohmann::json j = nlohmann::json::parse(in);
    EXPECT_EQ(j["kind"], "hypergraph-stability");
    EXPECT_TRUE(hs::recheck_counterexample(j));
    std::filesystem::remove_all(dir);
}

TEST(Archive, EmptyReportWritesNothing) {
    hs::VerificationReport rep;
    rep.claim_id = "x";
    auto dir = std::filesystem::temp_directory_path() / "hyperstab-archive-empty";
    std::filesystem::remove_all(dir);
    EXPECT_TRUE(hs::write_archive(rep, dir.string()).empty());
    EXPECT_FALSE(std::filesystem::exists(dir));
}

TEST(Recheck, RejectsHealedInstances) {
    auto h = hs::extremal_construction(3, 3, 2);
    // threshold above the edge count: hypothesis no longer met
    auto stale = hs::detail::stability_violation("lem-3.1", h, 2, 16, 2, 3);
    EXPECT_FALSE(hs::recheck_counterexample(stale));

    nlohmann::json bad;
    bad["kind"] = "no-such-kind";
    EXPECT_THROW(hs::recheck_counterexample(bad), hs::ParseError);
}

TEST(Recheck, RainbowFamilyKind) {
    nlohmann::ordered_json j;
    j["kind"] = "rainbow-family";
    j["n"] = 3;
    j["family"] = hs::detail::family_to_json(hs::rainbow_tight_family(3, 2));
    EXPECT_TRUE(hs::recheck_counterexample(j));

    std::vector<hs::BipartiteGraph> open{hs::BipartiteGraph::build(3, 3, {{0, 0}}),
                                         hs::BipartiteGraph::build(3, 3, {{1, 1}})};
    j["family"] = hs::detail::family_to_json(open);
    EXPECT_FALSE(hs::recheck_counterexample(j));
}

TEST(ClaimTable, LookupAndFlags) {
    EXPECT_EQ(hs::claim_table().size(), 14u);
    const auto* c = hs::find_claim("thm-1.2");
    ASSERT_NE(c, nullptr);
    EXPECT_TRUE(c->refutable_at_desk_scale);
    const auto* big = hs::find_claim("thm-1.3");
    ASSERT_NE(big, nullptr);
    EXPECT_FALSE(big->refutable_at_desk_scale);
    EXPECT_EQ(hs::find_claim("thm-9.9"), nullptr);
}

TEST(StabilityThreshold, MatchesConstructionPlusOne) {
    for (int m = 1; m <= 3; ++m)
        for (int n = m + 1; n <= 6; ++n)
            EXPECT_EQ(hs::detail::stability_threshold(n, m),
                      hs::extremal_edge_count(3, n, m) + 1);
}

}  // namespace
