#include <doctest.h>

#include <json.hpp>

#include "hardpairs/error.hpp"
#include "hardpairs/stats.hpp"

using namespace hardpairs;

TEST_CASE("coverage at n = 4 reaches all ordered primitive pairs") {
    Rng rng(1);
    const auto report = coverage_report(4, 10000, rng);
    CHECK(report.samples == 10000);
    CHECK(report.universe == 8u);
    CHECK(report.distinct_seen == 8);
    CHECK(report.coverage() == 1.0);
    std::uint64_t total = 0;
    for (const auto& [pair, count] : report.frequencies) {
        CHECK(is_difficult(pair));
        total += count;
    }
    CHECK(total == report.samples);
    REQUIRE(report.q3_q1_ratio);
    CHECK(*report.max_min_ratio >= *report.q3_q1_ratio);
    CHECK(*report.q3_q1_ratio >= 1.0);
}

TEST_CASE("empty coverage report") {
    Rng rng(1);
    const auto report = coverage_report(4, 0, rng);
    CHECK(report.distinct_seen == 0);
    CHECK(report.frequencies.empty());
    CHECK_FALSE(report.q3_q1_ratio);
    CHECK(report.coverage() == 0.0);
}

TEST_CASE("coverage is reproducible and has no universe beyond the guard") {
    Rng a(9);
    Rng b(9);
    const auto first = coverage_report(10, 200, a);
    const auto second = coverage_report(10, 200, b);
    CHECK(first.frequencies == second.frequencies);
    CHECK_FALSE(first.universe);
    CHECK_FALSE(first.coverage());
}

TEST_CASE("nearest-rank quartiles") {
    Rng rng(4);
    auto report = coverage_report(4, 2000, rng);
    std::vector<std::uint64_t> counts;
    for (const auto& [pair, count] : report.frequencies) counts.push_back(count);
    std::sort(counts.begin(), counts.end());
    // 8 counts: Q1 is the 2nd smallest, Q3 the 6th.
    REQUIRE(counts.size() == 8);
    CHECK(*report.q3_q1_ratio == doctest::Approx(double(counts[5]) / double(counts[1])));
    CHECK(*report.max_min_ratio == doctest::Approx(double(counts[7]) / double(counts[0])));
}

TEST_CASE("report serialisation") {
    Rng rng(2);
    const auto report = coverage_report(4, 100, rng);
    const std::string text = to_key_value(report);
    CHECK(text.find("n = 4\n") != std::string::npos);
    CHECK(text.find("samples = 100\n") != std::string::npos);
    CHECK(text.find("universe = 8\n") != std::string::npos);
    CHECK(text.find("frequency[") != std::string::npos);

    const auto doc = nlohmann::json::parse(to_json(report));
    CHECK(doc["n"] == 4);
    CHECK(doc["distinct_seen"] == report.distinct_seen);
    std::uint64_t total = 0;
    for (const auto& row : doc["frequencies"]) total += row["count"].get<std::uint64_t>();
    CHECK(total == 100);
}

TEST_CASE("reduction profile of identical pairs") {
    const TreePair same(parse_word("1101000"), parse_word("1101000"));
    const std::vector<TreePair> pairs{same, same};
    const auto profile = profile_pairs(pairs);
    CHECK(profile.samples == 2);
    CHECK(profile.mean_largest_fraction == 0.0);
    CHECK(profile.mean_forced_moves == 0.0);
    CHECK(profile.fully_resolved_fraction == 1.0);
}

TEST_CASE("reduction profile at n = 4 only sees components of size 4") {
    Rng rng(8);
    const auto profile = reduction_profile(4, 1000, rng);
    CHECK((profile.largest_component_seen == 0 || profile.largest_component_seen == 4));
    CHECK(profile.fully_resolved_fraction > 0.5);
    CHECK(to_key_value(profile).find("samples = 1000\n") != std::string::npos);
}

TEST_CASE("reduction profile at n = 20 shrinks the largest difficult piece") {
    Rng rng(20);
    const auto profile = reduction_profile(20, 1000, rng);
    MESSAGE("n=20 mean largest difficult fraction: " << profile.mean_largest_fraction);
    CHECK(profile.mean_largest_fraction <= 0.9);
}
