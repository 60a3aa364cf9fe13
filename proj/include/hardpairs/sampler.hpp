#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "hardpairs/rng.hpp"
#include "hardpairs/rotation.hpp"

namespace hardpairs {

struct DpsConfig {
    int n = 4;
    std::uint64_t seed = 0;
};

/// Bookkeeping from one sampling run, used to check the storage bound.
struct SampleTrace {
    std::size_t peak_candidates = 0;   // largest candidate list of any step
    std::size_t candidate_capacity = 0;  // slots reserved for that list
};

/// All difficult pairs (U, V) with U a growth neighbour of p.s and V a growth
/// neighbour of p.t, in lexicographic order. Throws Error(NotDifficultInput)
/// when p itself is not difficult.
std::vector<TreePair> dps_choices(const TreePair& p);

/// Difficult pair of size cfg.n grown from a random primitive pair. Throws
/// Error(SizeTooSmall) when cfg.n < 4.
TreePair dps_sample(const DpsConfig& cfg);
TreePair dps_sample(int n, Rng& rng, SampleTrace* trace = nullptr);

}  // namespace hardpairs
