#include <doctest.h>

#include <stdexcept>

#include <json.hpp>

#include "sturmkit/oracle.hpp"

using namespace sturmkit;

TEST_CASE("claim registry") {
    const auto ids = oracle::claim_ids();
    REQUIRE(ids.size() == 13);
    CHECK(ids.front() == "lem:prefsuf");
    CHECK(ids.back() == "theor:mf");
    for (const auto& id : ids) CHECK(oracle::is_claim(id));
    CHECK_FALSE(oracle::is_claim("nosuch"));

    CHECK(oracle::claim_bound("counts", oracle::profile::standard) == 14);
    CHECK(oracle::claim_bound("lem:rev", oracle::profile::standard) == 50);
    CHECK(oracle::claim_bound("theor:main", oracle::profile::quick) == 10);
    CHECK(oracle::claim_cap("lem:rev") == 200);
}

TEST_CASE("profiles parse") {
    CHECK(oracle::profile_from_string("quick") == oracle::profile::quick);
    CHECK(oracle::profile_from_string("standard") == oracle::profile::standard);
    CHECK(oracle::profile_from_string("thorough") == oracle::profile::thorough);
    CHECK_FALSE(oracle::profile_from_string("fast").has_value());
}

TEST_CASE("single claims pass") {
    const auto r = oracle::verify("theor:main", 10);
    CHECK(r.passed);
    CHECK(r.claim_id == "theor:main");
    CHECK(r.range == "internal lengths 0..10");
    CHECK_FALSE(r.counterexample.has_value());

    CHECK(oracle::verify("lem:rev", 50).passed);
    CHECK(oracle::verify("counts", 4).passed);
}

TEST_CASE("errors") {
    CHECK_THROWS_AS(oracle::verify("nosuch", 10), std::invalid_argument);
    CHECK_THROWS_AS(oracle::verify("counts", 19), std::length_error);
    CHECK_THROWS_AS(oracle::claim_bound("nosuch", oracle::profile::quick),
                    std::invalid_argument);
}

TEST_CASE("reports are deterministic apart from timing") {
    const auto a = oracle::verify("prop:bisp", 8);
    const auto b = oracle::verify("prop:bisp", 8);
    CHECK(a.claim_id == b.claim_id);
    CHECK(a.range == b.range);
    CHECK(a.passed == b.passed);
    CHECK(a.counterexample == b.counterexample);
    CHECK(oracle::to_text_line(a) == oracle::to_text_line(b));
}

TEST_CASE("full run on the quick profile") {
    const auto reports = oracle::verify_all(oracle::profile::quick);
    REQUIRE(reports.size() == 13);
    CHECK(oracle::all_passed(reports));
    const auto ids = oracle::claim_ids();
    for (std::size_t i = 0; i < reports.size(); ++i) CHECK(reports[i].claim_id == ids[i]);
}

TEST_CASE("report rendering") {
    oracle::report r;
    r.claim_id = "lem:rev";
    r.range = "slope pairs (p,q), 1 <= p,q <= 50";
    r.passed = true;
    r.elapsed_ms = 7;
    CHECK(oracle::to_text_line(r).rfind("PASS  lem:rev", 0) == 0);

    const auto j = nlohmann::json::parse(oracle::to_json_line(r));
    CHECK(j.at("claim_id") == "lem:rev");
    CHECK(j.at("status") == "pass");
    CHECK(j.at("counterexample").is_null());
    CHECK(j.at("elapsed_ms") == 7);

    r.passed = false;
    r.counterexample = "some word";
    const auto line = oracle::to_text_line(r);
    CHECK(line.rfind("FAIL", 0) == 0);
    CHECK(line.find("counterexample: some word") != std::string::npos);
    const auto jf = nlohmann::json::parse(oracle::to_json_line(r));
    CHECK(jf.at("status") == "fail");
    CHECK(jf.at("counterexample") == "some word");
}
