#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>

#include "hardpairs/rng.hpp"
#include "hardpairs/rotation.hpp"

namespace hardpairs {

struct CoverageReport {
    int n = 0;
    std::uint64_t samples = 0;
    std::uint64_t distinct_seen = 0;
    std::optional<std::uint64_t> universe;  // known only within the enumeration guard
    std::map<TreePair, std::uint64_t> frequencies;
    std::optional<double> q3_q1_ratio;
    std::optional<double> max_min_ratio;

    std::optional<double> coverage() const;
};

/// Draws `samples` DPS pairs of size n (one derived seed per draw) and
/// tallies them. Quartiles are nearest-rank over the counts of seen pairs.
CoverageReport coverage_report(int n, std::uint64_t samples, Rng& rng);

/// "key = value" lines; frequencies are listed as "pair = count".
std::string to_key_value(const CoverageReport& report);
std::string to_json(const CoverageReport& report);

struct ReductionProfile {
    std::uint64_t samples = 0;
    double mean_largest_fraction = 0.0;  // largest difficult component / n
    double mean_forced_moves = 0.0;
    double fully_resolved_fraction = 0.0;
    int largest_component_seen = 0;
};

ReductionProfile profile_pairs(std::span<const TreePair> pairs);

/// Reduces `samples` pairs of two independent uniform trees of size n.
ReductionProfile reduction_profile(int n, std::uint64_t samples, Rng& rng);

std::string to_key_value(const ReductionProfile& profile);

}  // namespace hardpairs
