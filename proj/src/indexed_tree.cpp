#include "hardpairs/indexed_tree.hpp"

namespace hardpairs {

IntervalTable::IntervalTable(int max_label)
    : stride_(static_cast<std::size_t>(max_label) + 1),
      bits_((stride_ * stride_ + 63) / 64, 0) {}

void IntervalTable::insert(Interval interval) {
    const auto s = slot(interval);
    bits_[s / 64] |= std::uint64_t{1} << (s % 64);
}

bool IntervalTable::contains(Interval interval) const noexcept {
    if (interval.lower < 0 || interval.upper < interval.lower) return false;
    if (static_cast<std::size_t>(interval.upper) >= stride_) return false;
    const auto s = slot(interval);
    return (bits_[s / 64] >> (s % 64)) & 1U;
}

IndexedTree::IndexedTree(TreeWord tree)
    : word(std::move(tree)),
      interval_table(word.size()),
      one_interval_table(word.size()) {
    const TreeShape shape(word);
    const auto n = static_cast<std::size_t>(shape.size());
    intervals.reserve(n);
    one_intervals.reserve(n);
    for (std::size_t i = 1; i < shape.length(); ++i) {
        if (!shape.is_internal(i)) continue;
        const Interval own = shape.interval(i);
        const Interval flipped = shape.one_interval(i);
        intervals.push_back(own);
        one_intervals.push_back(flipped);
        interval_table.insert(own);
        one_interval_table.insert(flipped);
    }
}

}  // namespace hardpairs
