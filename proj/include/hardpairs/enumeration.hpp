#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "hardpairs/rotation.hpp"
#include "hardpairs/tree_word.hpp"

namespace hardpairs {

inline constexpr int kTreeEnumerationGuard = 14;
inline constexpr int kPairEnumerationGuard = 8;

std::uint64_t catalan(int n);

/// Every tree of size n in lexicographic order.
std::vector<TreeWord> enumerate_trees(int n, int max_size = kTreeEnumerationGuard);

/// Every ordered difficult pair of size n in lexicographic order.
std::vector<TreePair> enumerate_difficult_pairs(int n, int max_size = kPairEnumerationGuard);

/// The difficult pairs of size 4, one representative (s < t) per unordered
/// pair. Size 4 has 8 ordered difficult pairs, which are these 4 and their
/// swaps; no smaller size has any.
const std::vector<TreePair>& primitive_pairs();

/// Census file: "# n=<n> count=<k>" followed by one "s t" line per pair.
void write_census(std::ostream& out, int n, const std::vector<TreePair>& pairs);

}  // namespace hardpairs
