#include "hardpairs/rng.hpp"

#include <cassert>

namespace hardpairs {

std::uint64_t Rng::below(std::uint64_t bound) {
    assert(bound > 0);
    // Reject the top partial block of 2^64 so every residue is equally likely.
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
        const std::uint64_t r = next();
        if (r >= threshold) return r % bound;
    }
}

}  // namespace hardpairs
