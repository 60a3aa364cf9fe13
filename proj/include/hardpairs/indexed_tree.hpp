#pragma once

#include <cstdint>
#include <vector>

#include "hardpairs/tree_word.hpp"

namespace hardpairs {

/// Membership bitmap over intervals (lower, upper) with 0 <= lower <= upper
/// <= max_label.
class IntervalTable {
public:
    IntervalTable() = default;
    explicit IntervalTable(int max_label);

    void insert(Interval interval);
    bool contains(Interval interval) const noexcept;

private:
    std::size_t slot(Interval interval) const noexcept {
        return static_cast<std::size_t>(interval.lower) * stride_ +
               static_cast<std::size_t>(interval.upper);
    }

    std::size_t stride_ = 0;
    std::vector<std::uint64_t> bits_;
};

/// A tree together with its non-root intervals and its 1-intervals, both as
/// lists (for iteration) and as tables (for O(1) lookup). Built in time
/// linear in the word length plus the table allocation.
struct IndexedTree {
    TreeWord word;
    std::vector<Interval> intervals;      // root span excluded
    std::vector<Interval> one_intervals;
    IntervalTable interval_table;
    IntervalTable one_interval_table;

    explicit IndexedTree(TreeWord tree);
};

}  // namespace hardpairs
