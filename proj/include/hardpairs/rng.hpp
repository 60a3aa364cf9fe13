#pragma once

#include <cstdint>
#include <random>

namespace hardpairs {

/// Seedable pseudorandom source used by every sampling routine.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the C++
/// standard. Bounded draws use rejection sampling implemented here rather
/// than std::uniform_int_distribution, whose algorithm is left to the
/// standard library, so a seed yields the same samples on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform draw from [0, bound). `bound` must be positive.
    std::uint64_t below(std::uint64_t bound);

    bool coin() { return (next() >> 63) != 0; }

private:
    std::mt19937_64 engine_;
};

}  // namespace hardpairs
