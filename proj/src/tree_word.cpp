#include "hardpairs/tree_word.hpp"

#include <cassert>

#include "hardpairs/error.hpp"

namespace hardpairs {

bool is_valid_word(std::string_view text) noexcept {
    if (text.empty()) return false;
    // Number of subtrees still owed; the word must close exactly at its end.
    std::size_t open = 1;
    for (char c : text) {
        if (open == 0) return false;
        if (c == '1') {
            ++open;
        } else if (c == '0') {
            --open;
        } else {
            return false;
        }
    }
    return open == 0;
}

TreeWord TreeWord::parse(std::string_view text) {
    if (!is_valid_word(text)) {
        throw Error(ErrorKind::MalformedWord, "malformed tree word \"" + std::string(text) + "\"");
    }
    return TreeWord(std::string(text));
}

TreeWord TreeWord::trusted(std::string symbols) {
    assert(is_valid_word(symbols));
    return TreeWord(std::move(symbols));
}

TreeWord parse_word(std::string_view text) { return TreeWord::parse(text); }

TreeShape::TreeShape(const TreeWord& word)
    : size_(word.size()),
      parent_(word.length(), -1),
      end_(word.length(), 0),
      zeros_(word.length(), 0) {
    struct Open {
        std::size_t index;
        int finished_children;
    };
    std::vector<Open> stack;
    stack.reserve(static_cast<std::size_t>(size_));
    const std::string& symbols = word.str();
    int zeros = 0;
    for (std::size_t i = 0; i < symbols.size(); ++i) {
        zeros_[i] = zeros;
        if (!stack.empty()) parent_[i] = static_cast<std::int32_t>(stack.back().index);
        if (symbols[i] == '1') {
            stack.push_back({i, 0});
            continue;
        }
        ++zeros;
        end_[i] = static_cast<std::uint32_t>(i + 1);
        while (!stack.empty() && ++stack.back().finished_children == 2) {
            end_[stack.back().index] = static_cast<std::uint32_t>(i + 1);
            stack.pop_back();
        }
    }
}

std::optional<std::size_t> TreeShape::parent(std::size_t index) const {
    const auto p = parent_.at(index);
    if (p < 0) return std::nullopt;
    return static_cast<std::size_t>(p);
}

Interval TreeShape::one_interval(std::size_t index) const {
    const auto p = parent(index);
    assert(p && is_internal(index));
    if (left(*p) == index) {
        return {zeros_[right(index)], interval(*p).upper};
    }
    return {zeros_[*p], interval(left(index)).upper};
}

NodeRef navigate(const TreeWord& word, NodeRef node, Step step) {
    if (!word.contains(node)) {
        throw Error(ErrorKind::MalformedWord, "node index out of range");
    }
    const TreeShape shape(word);
    switch (step) {
        case Step::Parent:
            if (auto p = shape.parent(node.index)) return NodeRef{*p};
            throw Error(ErrorKind::NoParent, "the root has no parent");
        case Step::Left:
        case Step::Right:
            if (!shape.is_internal(node.index)) {
                throw Error(ErrorKind::NotInternal, "a leaf has no children");
            }
            return NodeRef{step == Step::Left ? shape.left(node.index)
                                              : shape.right(node.index)};
    }
    return node;
}

Interval interval_of(const TreeWord& word, NodeRef node) {
    if (!word.contains(node)) {
        throw Error(ErrorKind::MalformedWord, "node index out of range");
    }
    return TreeShape(word).interval(node.index);
}

IntervalSet intervals(const TreeWord& word, bool include_root) {
    const TreeShape shape(word);
    IntervalSet out;
    for (std::size_t i = include_root ? 0 : 1; i < shape.length(); ++i) {
        if (shape.is_internal(i)) out.insert(shape.interval(i));
    }
    return out;
}

Interval one_interval_of(const TreeWord& word, NodeRef node) {
    if (!word.contains(node)) {
        throw Error(ErrorKind::MalformedWord, "node index out of range");
    }
    const TreeShape shape(word);
    if (shape.is_root(node.index)) {
        throw Error(ErrorKind::NoParent, "the root cannot be rotated");
    }
    if (!shape.is_internal(node.index)) {
        throw Error(ErrorKind::NotInternal, "a leaf cannot be rotated");
    }
    return shape.one_interval(node.index);
}

IntervalSet one_intervals(const TreeWord& word) {
    const TreeShape shape(word);
    IntervalSet out;
    for (std::size_t i = 1; i < shape.length(); ++i) {
        if (shape.is_internal(i)) out.insert(shape.one_interval(i));
    }
    return out;
}

std::string to_string(Interval interval) {
    return "(" + std::to_string(interval.lower) + "," + std::to_string(interval.upper) + ")";
}

}  // namespace hardpairs
