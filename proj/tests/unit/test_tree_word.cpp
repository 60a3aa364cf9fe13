#include <doctest.h>

#include "hardpairs/error.hpp"
#include "hardpairs/indexed_tree.hpp"
#include "hardpairs/tree_word.hpp"
#include "oracle.hpp"
#include "random_trees.hpp"

using namespace hardpairs;
using testing_support::as_spans;

namespace {

ErrorKind kind_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected hardpairs::Error");
    return ErrorKind::MalformedWord;
}

}  // namespace

TEST_CASE("parse_word accepts valid words and computes the size") {
    CHECK(parse_word("100").size() == 1);
    CHECK(parse_word("1100100").size() == 3);
    CHECK(parse_word("0").size() == 0);
    CHECK(TreeWord{}.str() == "0");
}

TEST_CASE("parse_word rejects malformed words") {
    for (const char* bad : {"1010", "", "1", "00", "10", "1000", "101", "1x0", "100 "}) {
        CAPTURE(bad);
        CHECK(kind_of([&] { parse_word(bad); }) == ErrorKind::MalformedWord);
    }
}

TEST_CASE("navigate") {
    const TreeWord w = parse_word("1100100");
    CHECK(navigate(w, {0}, Step::Left) == NodeRef{1});
    CHECK(navigate(w, {0}, Step::Right) == NodeRef{4});
    CHECK(navigate(w, {4}, Step::Parent) == NodeRef{0});
    CHECK(navigate(w, {3}, Step::Parent) == NodeRef{1});
    CHECK(kind_of([&] { navigate(w, {0}, Step::Parent); }) == ErrorKind::NoParent);
    CHECK(kind_of([&] { navigate(w, {2}, Step::Left); }) == ErrorKind::NotInternal);
}

TEST_CASE("interval_of") {
    const TreeWord w = parse_word("1100100");
    CHECK(interval_of(w, {2}) == Interval{0, 0});
    CHECK(interval_of(w, {1}) == Interval{0, 1});
    CHECK(interval_of(w, {0}) == Interval{0, 3});
    CHECK(interval_of(w, {6}) == Interval{3, 3});
}

TEST_CASE("intervals with and without the root") {
    CHECK(intervals(parse_word("100"), true) == IntervalSet{{0, 1}});
    CHECK(intervals(parse_word("1010100"), true) == IntervalSet{{0, 3}, {1, 3}, {2, 3}});
    CHECK(intervals(parse_word("11000"), false) == IntervalSet{{0, 1}});
    CHECK(intervals(parse_word("0"), true).empty());
}

TEST_CASE("one_interval_of covers both child cases") {
    CHECK(one_interval_of(parse_word("1010100"), {2}) == Interval{0, 1});
    CHECK(one_interval_of(parse_word("11000"), {1}) == Interval{1, 2});
    CHECK(kind_of([] { one_interval_of(parse_word("100"), {0}); }) == ErrorKind::NoParent);
    CHECK(kind_of([] { one_interval_of(parse_word("11000"), {2}); }) == ErrorKind::NotInternal);
}

TEST_CASE("one_intervals") {
    CHECK(one_intervals(parse_word("100")).empty());
    CHECK(one_intervals(parse_word("11000")) == IntervalSet{{1, 2}});
    CHECK(one_intervals(parse_word("1100100")) == IntervalSet{{1, 3}, {0, 2}});
}

TEST_CASE("leaf labels count preceding zeros and subtree sizes match spans") {
    for (int n = 1; n <= 20; ++n) {
        for (const auto& w : testing_support::random_trees(n, 40, 100 + n)) {
            const oracle::Tree tree(w.str());
            const TreeShape shape(w);
            for (std::size_t i = 0; i < w.length(); ++i) {
                const auto& node = tree.nodes[i];
                const Interval iv = interval_of(w, {i});
                if (node.leaf()) {
                    REQUIRE(iv == Interval{node.label, node.label});
                } else {
                    REQUIRE(iv.upper - iv.lower == tree.internal_count(static_cast<int>(i)));
                    REQUIRE(std::pair{iv.lower, iv.upper} == tree.span(static_cast<int>(i)));
                    REQUIRE(shape.subtree_size(i) == tree.internal_count(static_cast<int>(i)));
                }
                const auto parent = shape.parent(i);
                REQUIRE((parent ? static_cast<int>(*parent) : -1) == node.parent);
            }
        }
    }
}

TEST_CASE("interval and 1-interval sets agree with the recursive definitions") {
    for (int n = 1; n <= 25; ++n) {
        for (const auto& w : testing_support::random_trees(n, 40, 200 + n)) {
            const auto with_root = intervals(w, true);
            const auto flips = one_intervals(w);
            REQUIRE(as_spans(with_root) == oracle::spans(w.str(), true));
            REQUIRE(as_spans(intervals(w, false)) == oracle::spans(w.str(), false));
            REQUIRE(as_spans(flips) == oracle::one_spans(w.str()));
            REQUIRE(with_root.size() == static_cast<std::size_t>(n));
            REQUIRE(flips.size() == static_cast<std::size_t>(n - 1));
        }
    }
}

TEST_CASE("IndexedTree lists and tables agree") {
    for (const auto& w : testing_support::random_trees(12, 50, 7)) {
        const IndexedTree indexed(w);
        const IntervalSet own(indexed.intervals.begin(), indexed.intervals.end());
        const IntervalSet flips(indexed.one_intervals.begin(), indexed.one_intervals.end());
        CHECK(own == intervals(w, false));
        CHECK(flips == one_intervals(w));
        for (int lo = 0; lo <= 12; ++lo) {
            for (int hi = lo; hi <= 12; ++hi) {
                REQUIRE(indexed.interval_table.contains({lo, hi}) == own.contains({lo, hi}));
                REQUIRE(indexed.one_interval_table.contains({lo, hi}) == flips.contains({lo, hi}));
            }
        }
        CHECK_FALSE(indexed.interval_table.contains({0, 13}));
        CHECK_FALSE(indexed.interval_table.contains({-1, 2}));
    }
}
