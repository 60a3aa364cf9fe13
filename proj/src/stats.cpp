#include "hardpairs/stats.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "hardpairs/enumeration.hpp"
#include "hardpairs/growth.hpp"
#include "hardpairs/sampler.hpp"

namespace hardpairs {

namespace {

// Nearest-rank percentile of an ascending, non-empty list.
std::uint64_t nearest_rank(const std::vector<std::uint64_t>& sorted, double fraction) {
    const auto k = static_cast<double>(sorted.size());
    const auto rank = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(fraction * k)));
    return sorted[rank - 1];
}

std::string format_number(double value) {
    std::ostringstream out;
    out.precision(6);
    out << value;
    return out.str();
}

}  // namespace

std::optional<double> CoverageReport::coverage() const {
    if (!universe || *universe == 0) return std::nullopt;
    return static_cast<double>(distinct_seen) / static_cast<double>(*universe);
}

CoverageReport coverage_report(int n, std::uint64_t samples, Rng& rng) {
    CoverageReport report;
    report.n = n;
    report.samples = samples;
    for (std::uint64_t i = 0; i < samples; ++i) {
        Rng draw(rng.next());
        ++report.frequencies[dps_sample(n, draw)];
    }
    report.distinct_seen = report.frequencies.size();
    if (n <= kPairEnumerationGuard) report.universe = enumerate_difficult_pairs(n).size();

    if (!report.frequencies.empty()) {
        std::vector<std::uint64_t> counts;
        counts.reserve(report.frequencies.size());
        for (const auto& [pair, count] : report.frequencies) counts.push_back(count);
        std::sort(counts.begin(), counts.end());
        const auto q1 = nearest_rank(counts, 0.25);
        const auto q3 = nearest_rank(counts, 0.75);
        report.q3_q1_ratio = static_cast<double>(q3) / static_cast<double>(q1);
        report.max_min_ratio = static_cast<double>(counts.back()) / static_cast<double>(counts.front());
    }
    return report;
}

std::string to_key_value(const CoverageReport& report) {
    std::ostringstream out;
    auto optional = [](const auto& value) {
        return value ? format_number(static_cast<double>(*value)) : std::string("none");
    };
    out << "n = " << report.n << '\n'
        << "samples = " << report.samples << '\n'
        << "distinct_seen = " << report.distinct_seen << '\n'
        << "universe = " << optional(report.universe) << '\n'
        << "coverage = " << optional(report.coverage()) << '\n'
        << "q3_q1_ratio = " << optional(report.q3_q1_ratio) << '\n'
        << "max_min_ratio = " << optional(report.max_min_ratio) << '\n';
    for (const auto& [pair, count] : report.frequencies) {
        out << "frequency[" << to_string(pair) << "] = " << count << '\n';
    }
    return out.str();
}

std::string to_json(const CoverageReport& report) {
    using nlohmann::json;
    auto optional = [](const auto& value) { return value ? json(*value) : json(nullptr); };
    json frequencies = json::array();
    for (const auto& [pair, count] : report.frequencies) {
        frequencies.push_back({{"s", pair.s.str()}, {"t", pair.t.str()}, {"count", count}});
    }
    const json doc = {
        {"n", report.n},
        {"samples", report.samples},
        {"distinct_seen", report.distinct_seen},
        {"universe", optional(report.universe)},
        {"coverage", optional(report.coverage())},
        {"q3_q1_ratio", optional(report.q3_q1_ratio)},
        {"max_min_ratio", optional(report.max_min_ratio)},
        {"frequencies", std::move(frequencies)},
    };
    return doc.dump(2) + "\n";
}

ReductionProfile profile_pairs(std::span<const TreePair> pairs) {
    ReductionProfile profile;
    profile.samples = pairs.size();
    if (pairs.empty()) return profile;
    double fraction_sum = 0.0;
    double forced_sum = 0.0;
    std::uint64_t resolved = 0;
    for (const auto& pair : pairs) {
        const ReductionResult result = reduce(pair);
        int largest = 0;
        for (const auto& component : result.components) largest = std::max(largest, component.size());
        profile.largest_component_seen = std::max(profile.largest_component_seen, largest);
        if (pair.size() > 0) fraction_sum += static_cast<double>(largest) / pair.size();
        forced_sum += result.forced_moves;
        if (result.components.empty()) ++resolved;
    }
    const auto count = static_cast<double>(pairs.size());
    profile.mean_largest_fraction = fraction_sum / count;
    profile.mean_forced_moves = forced_sum / count;
    profile.fully_resolved_fraction = static_cast<double>(resolved) / count;
    return profile;
}

ReductionProfile reduction_profile(int n, std::uint64_t samples, Rng& rng) {
    std::vector<TreePair> pairs;
    pairs.reserve(samples);
    for (std::uint64_t i = 0; i < samples; ++i) {
        TreeWord s = remy_sample(n, rng);
        TreeWord t = remy_sample(n, rng);
        pairs.emplace_back(std::move(s), std::move(t));
    }
    return profile_pairs(pairs);
}

std::string to_key_value(const ReductionProfile& profile) {
    std::ostringstream out;
    out << "samples = " << profile.samples << '\n'
        << "mean_largest_fraction = " << format_number(profile.mean_largest_fraction) << '\n'
        << "mean_forced_moves = " << format_number(profile.mean_forced_moves) << '\n'
        << "fully_resolved_fraction = " << format_number(profile.fully_resolved_fraction) << '\n'
        << "largest_component_seen = " << profile.largest_component_seen << '\n';
    return out.str();
}

}  // namespace hardpairs
