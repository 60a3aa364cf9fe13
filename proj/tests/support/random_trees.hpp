#pragma once

#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "hardpairs/growth.hpp"
#include "hardpairs/rng.hpp"

namespace testing_support {

inline std::vector<hardpairs::TreeWord> random_trees(int n, int count, std::uint64_t seed) {
    hardpairs::Rng rng(seed);
    std::vector<hardpairs::TreeWord> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) out.push_back(hardpairs::remy_sample(n, rng));
    return out;
}

inline std::set<std::pair<int, int>> as_spans(const hardpairs::IntervalSet& set) {
    std::set<std::pair<int, int>> out;
    for (const auto iv : set) out.emplace(iv.lower, iv.upper);
    return out;
}

}  // namespace testing_support
