#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace hardpairs {

/// Position of a node in the pre-order word of a tree. Only meaningful
/// together with the word it was taken from.
struct NodeRef {
    std::size_t index = 0;

    auto operator<=>(const NodeRef&) const = default;
};

/// Leaf-label span (lower, upper) of a node. Leaves have lower == upper.
struct Interval {
    int lower = 0;
    int upper = 0;

    auto operator<=>(const Interval&) const = default;
};

using IntervalSet = std::set<Interval>;

enum class Step { Parent, Left, Right };

/// An extended ordered binary tree stored as its pre-order word over {1, 0}:
/// `1` for an internal node, `0` for a leaf. A tree of size n (internal
/// nodes) has a word of length 2n + 1. The word "0" is the size-0 tree.
///
/// Ordering and equality are those of the word, so sorted containers of
/// TreeWord are in lexicographic order with '0' < '1'.
class TreeWord {
public:
    /// The size-0 tree "0".
    TreeWord() : symbols_("0") {}

    /// Validates `text` and returns the tree it encodes. Throws
    /// Error(MalformedWord) on foreign symbols, wrong counts, or a prefix
    /// that closes the tree early.
    static TreeWord parse(std::string_view text);

    /// Wraps a word already known to be valid (produced by a word-level
    /// transformation of a valid tree). Checked only in debug builds.
    static TreeWord trusted(std::string symbols);

    const std::string& str() const noexcept { return symbols_; }
    int size() const noexcept { return static_cast<int>(symbols_.size() / 2); }
    std::size_t length() const noexcept { return symbols_.size(); }
    char symbol(NodeRef node) const { return symbols_.at(node.index); }
    bool is_internal(NodeRef node) const { return symbol(node) == '1'; }
    bool contains(NodeRef node) const noexcept { return node.index < symbols_.size(); }

    auto operator<=>(const TreeWord&) const = default;

private:
    explicit TreeWord(std::string symbols) : symbols_(std::move(symbols)) {}

    std::string symbols_;
};

/// True iff `text` is a well-formed tree word.
bool is_valid_word(std::string_view text) noexcept;

TreeWord parse_word(std::string_view text);

/// Structural index of one tree, built in a single left-to-right pass:
/// parent links, subtree extents and the number of leaves preceding every
/// position. All queries are O(1).
class TreeShape {
public:
    explicit TreeShape(const TreeWord& word);

    int size() const noexcept { return size_; }
    std::size_t length() const noexcept { return parent_.size(); }
    bool is_internal(std::size_t index) const { return end_.at(index) != index + 1; }
    bool is_root(std::size_t index) const { return index == 0; }

    /// Parent index, or nullopt for the root.
    std::optional<std::size_t> parent(std::size_t index) const;
    std::size_t left(std::size_t index) const { return index + 1; }
    std::size_t right(std::size_t index) const { return end_[index + 1]; }
    /// One past the last position of the subtree rooted at `index`.
    std::size_t subtree_end(std::size_t index) const { return end_[index]; }
    /// Internal-node count of the subtree rooted at `index`.
    int subtree_size(std::size_t index) const {
        return static_cast<int>((end_[index] - index) / 2);
    }
    int zeros_before(std::size_t index) const { return zeros_[index]; }

    Interval interval(std::size_t index) const {
        const int lower = zeros_[index];
        return {lower, lower + subtree_size(index)};
    }
    /// The interval created by rotating at an internal non-root node.
    Interval one_interval(std::size_t index) const;

private:
    int size_ = 0;
    std::vector<std::int32_t> parent_;
    std::vector<std::uint32_t> end_;
    std::vector<std::int32_t> zeros_;
};

/// Throws Error(NoParent) for the parent of the root and Error(NotInternal)
/// for a child of a leaf.
NodeRef navigate(const TreeWord& word, NodeRef node, Step step);

Interval interval_of(const TreeWord& word, NodeRef node);

/// Intervals of all internal nodes; the root span (0, n) only when
/// `include_root` is set.
IntervalSet intervals(const TreeWord& word, bool include_root);

/// Throws Error(NoParent) for the root and Error(NotInternal) for a leaf.
Interval one_interval_of(const TreeWord& word, NodeRef node);

IntervalSet one_intervals(const TreeWord& word);

std::string to_string(Interval interval);

}  // namespace hardpairs

template <>
struct std::hash<hardpairs::TreeWord> {
    std::size_t operator()(const hardpairs::TreeWord& word) const noexcept {
        return std::hash<std::string>{}(word.str());
    }
};
