#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wienerlab/canonical.hpp"
#include "wienerlab/closed_forms.hpp"
#include "wienerlab/families.hpp"
#include "wienerlab/invariants.hpp"
#include "wienerlab/verify.hpp"

using namespace wienerlab;

TEST_CASE("tier table keeps top distinct values with exact counts") {
    TierTable t(2);
    t.add(10, "a");
    t.add(12, "b");
    t.add(11, "c");
    t.add(12, "d");
    t.add(5, "z");
    auto tiers = t.tiers();
    REQUIRE(tiers.size() == 2);
    CHECK(tiers[0].wiener == 12);
    CHECK(tiers[0].member_count == 2);
    CHECK(tiers[0].members == std::vector<std::string>{"b", "d"});
    CHECK(tiers[1].wiener == 11);
}

TEST_CASE("named graphs covers the constructions of order 6") {
    auto names = named_graphs(6);
    CHECK(names.at(canonical_form(cycle(6)).graph6) == "C_6");
    CHECK(names.count(canonical_form(theta(6, 2, 2)).graph6) == 1);
    CHECK(names.count(canonical_form(exceptional("g6-2")).graph6) == 1);
    CHECK(names.count(canonical_form(complete(6)).graph6) == 1);
}

TEST_CASE("table of small-order reference values") {
    ClaimReport r = verify_table1();
    CHECK(r.status == ClaimStatus::Pass);
}

TEST_CASE("closed-form table up to n=200") {
    ClaimReport r = verify_table2(200);
    CHECK(r.status == ClaimStatus::Pass);
}

TEST_CASE("enumeration claims pass for n=3..7") {
    for (int n = 3; n <= 7; ++n) {
        EnumerationClaims claims = run_enumeration_claims(n, 1);
        for (const auto& r : claims.reports) {
            INFO("claim ", r.claim, " at n=", n);
            CHECK(r.ok());
        }
    }
}

TEST_CASE("ranking for n=7 puts the known families on top") {
    EnumerationConfig cfg;
    cfg.n = 7;
    auto ranking = rank_by_wiener(cfg, 3);
    REQUIRE(!ranking.empty());
    CHECK(ranking[0].rank == 1);
    CHECK(ranking[0].wiener == closed_form(ClosedFormFamily::Cycle, 7));
    CHECK(ranking[0].family == "C_7");
    // second tier: H_{7,1,2}; third: H_{7,2,2}
    bool saw112 = false, saw122 = false;
    for (const auto& e : ranking) {
        if (e.rank == 2) {
            CHECK(e.wiener == closed_form(ClosedFormFamily::H112, 7));
            saw112 = true;
        }
        if (e.rank == 3) {
            CHECK(e.wiener == closed_form(ClosedFormFamily::H122, 7));
            saw122 = true;
        }
    }
    CHECK(saw112);
    CHECK(saw122);
}

TEST_CASE("chord-placement case analysis at the even exception orders") {
    for (int n : {6, 8, 10}) {
        ClaimReport r = verify_chord_cases(n);
        INFO("n=", n);
        CHECK(r.status == ClaimStatus::Pass);
    }
}

TEST_CASE("family sweeps") {
    for (int n = 6; n <= 30; ++n) {
        CHECK(verify_family_sweep(n, 'H').status == ClaimStatus::Pass);
        CHECK(verify_family_sweep(n, 'I').status == ClaimStatus::Pass);
    }
}

TEST_CASE("plus-edge identity sweep") {
    CHECK(verify_h22_plus_identity(5, 50).status == ClaimStatus::Pass);
}

TEST_CASE("implication sweeps at small orders") {
    for (int n = 4; n <= 7; ++n) {
        ClaimReport r = verify_implication_sweeps(n, 1);
        INFO("n=", n);
        CHECK(r.status == ClaimStatus::Pass);
        // the sweep must not be vacuous
        long long hits = 0;
        for (const auto& [key, value] : r.metrics)
            if (key.rfind("hits: ", 0) == 0) hits += value;
        CHECK(hits > 0);
    }
}

TEST_CASE("spot check of the main ordering without enumeration") {
    ClaimReport r = verify_ordering_spot(11, false, 1);
    CHECK(r.status == ClaimStatus::Pass);
    REQUIRE(!r.notes.empty());
}

TEST_CASE("report serialization") {
    ClaimReport r = verify_table1();
    std::string j = report_to_json(r);
    CHECK(j.find("\"claim\"") != std::string::npos);
    CHECK(j.find("\"status\"") != std::string::npos);
    std::string t = report_to_text(r);
    CHECK(t.find(r.claim) != std::string::npos);
}
