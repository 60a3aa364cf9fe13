#pragma once

#include <string>
#include <vector>

#include "hardpairs/rng.hpp"
#include "hardpairs/tree_word.hpp"

namespace hardpairs {

enum class GrowSide { Left, Right };

/// Grow `node` to the given side: a new internal node takes its place and
/// `node` becomes that side's child, with a fresh leaf as the sibling.
struct GrowSite {
    NodeRef node;
    GrowSide side = GrowSide::Left;
};

TreeWord grow(const TreeWord& word, GrowSite site);

/// Distinct trees reachable by one grow step, sorted. At most 3n + 1.
std::vector<TreeWord> growth_neighbors(const TreeWord& word);

/// Uniform random tree of size n (Remy growth from the size-1 tree).
TreeWord remy_sample(int n, Rng& rng);

/// word = prefix + suffix where suffix is the word of the internal node
/// whose right child is the last leaf.
struct WordSplit {
    std::string prefix;
    std::string suffix;

    bool operator==(const WordSplit&) const = default;
};

WordSplit word_decompose(const TreeWord& word);

/// Index of the internal node whose right child is the last leaf.
NodeRef last_leaf_parent(const TreeWord& word);

/// The tree grown left at last_leaf_parent(word).
TreeWord sigma(const TreeWord& word);

/// Image of `node` in sigma(word): positions inside the suffix shift by one.
NodeRef growth_injection(const TreeWord& word, NodeRef node);

}  // namespace hardpairs
