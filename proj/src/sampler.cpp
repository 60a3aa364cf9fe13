#include "hardpairs/sampler.hpp"

#include <stdexcept>
#include <utility>

#include "hardpairs/enumeration.hpp"
#include "hardpairs/error.hpp"
#include "hardpairs/growth.hpp"

namespace hardpairs {

namespace {

using Pick = std::pair<std::uint32_t, std::uint32_t>;

// Growth neighbours of both trees, indexed once per step, and the index
// pairs (u, v) that form difficult pairs. Each check is linear in n.
struct Candidates {
    std::vector<IndexedTree> grown_s;
    std::vector<IndexedTree> grown_t;
    std::vector<Pick> picks;

    void collect(const TreePair& pair) {
        grown_s.clear();
        grown_t.clear();
        picks.clear();
        for (auto& word : growth_neighbors(pair.s)) grown_s.emplace_back(std::move(word));
        for (auto& word : growth_neighbors(pair.t)) grown_t.emplace_back(std::move(word));
        for (std::uint32_t u = 0; u < grown_s.size(); ++u) {
            for (std::uint32_t v = 0; v < grown_t.size(); ++v) {
                if (is_difficult(grown_s[u], grown_t[v])) picks.emplace_back(u, v);
            }
        }
    }

    TreePair at(Pick pick) const {
        return TreePair(grown_s[pick.first].word, grown_t[pick.second].word);
    }
};

std::size_t neighbor_bound(int n) { return 3 * static_cast<std::size_t>(n) + 1; }

}  // namespace

std::vector<TreePair> dps_choices(const TreePair& p) {
    if (!is_difficult(p)) {
        throw Error(ErrorKind::NotDifficultInput, "input pair is not difficult: " + to_string(p));
    }
    Candidates candidates;
    candidates.collect(p);
    std::vector<TreePair> out;
    out.reserve(candidates.picks.size());
    for (const Pick& pick : candidates.picks) out.push_back(candidates.at(pick));
    return out;
}

TreePair dps_sample(int n, Rng& rng, SampleTrace* trace) {
    if (n < 4) throw Error(ErrorKind::SizeTooSmall, "size must be >= 4");

    const auto& primitives = primitive_pairs();
    TreePair current = primitives[rng.below(primitives.size())];
    if (rng.coin()) std::swap(current.s, current.t);

    Candidates candidates;
    const std::size_t bound = neighbor_bound(n - 1);
    candidates.picks.reserve(bound * bound);
    std::size_t peak = 0;
    for (int size = 5; size <= n; ++size) {
        candidates.collect(current);
        if (candidates.picks.empty()) {
            throw std::logic_error("no difficult growth pair for " + to_string(current) +
                                   "; the sigma pair should always qualify");
        }
        peak = std::max(peak, candidates.picks.size());
        current = candidates.at(candidates.picks[rng.below(candidates.picks.size())]);
    }
    if (trace != nullptr) {
        trace->peak_candidates = peak;
        trace->candidate_capacity = candidates.picks.capacity();
    }
    return current;
}

TreePair dps_sample(const DpsConfig& cfg) {
    Rng rng(cfg.seed);
    return dps_sample(cfg.n, rng);
}

}  // namespace hardpairs
