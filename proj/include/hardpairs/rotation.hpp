#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hardpairs/indexed_tree.hpp"
#include "hardpairs/tree_word.hpp"

namespace hardpairs {

/// Two trees of the same size.
struct TreePair {
    TreeWord s;
    TreeWord t;

    TreePair() = default;
    /// Throws Error(SizeMismatch) when the sizes differ.
    TreePair(TreeWord first, TreeWord second);

    int size() const noexcept { return s.size(); }

    auto operator<=>(const TreePair&) const = default;
};

/// Parses "word word" (exactly one space between the words).
TreePair parse_pair(std::string_view text);
std::string to_string(const TreePair& pair);

enum class Side { S, T };

/// A rotation in one tree of a pair whose 1-interval is a non-root interval
/// of the other tree.
struct OneOffMove {
    Side side = Side::S;
    NodeRef node;
    Interval created;

    auto operator<=>(const OneOffMove&) const = default;
};

struct ReductionResult {
    int forced_moves = 0;
    std::vector<TreePair> components;
};

inline constexpr int kDefaultDistanceGuard = 12;

/// Promotes `node` to its parent's position. Throws Error(NoParent) for the
/// root and Error(NotInternal) for a leaf.
TreeWord rotate(const TreeWord& word, NodeRef node);

/// All n - 1 single-rotation neighbours, sorted.
std::vector<TreeWord> rotation_neighbors(const TreeWord& word);

/// Shortest rotation distance via bidirectional breadth-first search over the
/// rotation graph. Throws Error(SizeGuardExceeded) when the pair is larger
/// than `max_size`.
int exact_distance(const TreePair& pair, int max_size = kDefaultDistanceGuard);

/// Non-root intervals present in both trees.
IntervalSet common_intervals(const TreePair& pair);

/// One-off moves of S (by node index) followed by those of T.
std::vector<OneOffMove> one_off_moves(const TreePair& pair);

/// A pair is difficult when the trees differ, share no non-root interval,
/// and no single rotation of either tree creates an interval of the other.
bool is_difficult(const TreePair& pair);
bool is_difficult(const IndexedTree& s, const IndexedTree& t) noexcept;

/// Splits along the common interval `c`: the first pair holds the two
/// subtrees spanning `c`, the second the two trees with that subtree
/// collapsed to a leaf. Throws Error(NotCommon).
std::pair<TreePair, TreePair> split_at_common(const TreePair& pair, Interval c);

/// Applies splits at common intervals (smallest first) and one-off flips
/// until only difficult components remain.
ReductionResult reduce(const TreePair& pair);

}  // namespace hardpairs
