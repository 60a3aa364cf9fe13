#include "hardpairs/rotation.hpp"

#include <algorithm>
#include <climits>
#include <stdexcept>
#include <unordered_map>

#include "hardpairs/error.hpp"

namespace hardpairs {

namespace {

std::string rotate_at(const std::string& w, const TreeShape& shape, std::size_t i) {
    const std::size_t p = *shape.parent(i);
    std::string out;
    out.reserve(w.size());
    if (shape.left(p) == i) {
        // 1 [1 A B] C  ->  1 A [1 B C]
        const std::size_t a_end = shape.subtree_end(shape.left(i));
        out.append(w, 0, i);
        out.append(w, i + 1, a_end - i - 1);
        out.push_back('1');
        out.append(w, a_end, std::string::npos);
    } else {
        // 1 A [1 B C]  ->  [1 1 A B] C
        out.append(w, 0, p + 1);
        out.push_back('1');
        out.append(w, p + 1, i - p - 1);
        out.append(w, i + 1, std::string::npos);
    }
    return out;
}

std::vector<TreeWord> unsorted_rotation_neighbors(const TreeWord& word) {
    const TreeShape shape(word);
    std::vector<TreeWord> out;
    out.reserve(static_cast<std::size_t>(std::max(0, shape.size() - 1)));
    for (std::size_t i = 1; i < shape.length(); ++i) {
        if (shape.is_internal(i)) out.push_back(TreeWord::trusted(rotate_at(word.str(), shape, i)));
    }
    return out;
}

// Index of the non-root internal node spanning `c`, if any.
std::optional<std::size_t> find_node(const TreeShape& shape, Interval c) {
    for (std::size_t i = 1; i < shape.length(); ++i) {
        if (shape.is_internal(i) && shape.interval(i) == c) return i;
    }
    return std::nullopt;
}

void append_moves(const TreeWord& word, const IntervalSet& other, Side side,
                  std::vector<OneOffMove>& out) {
    const TreeShape shape(word);
    for (std::size_t i = 1; i < shape.length(); ++i) {
        if (!shape.is_internal(i)) continue;
        const Interval created = shape.one_interval(i);
        if (other.contains(created)) out.push_back({side, NodeRef{i}, created});
    }
}

}  // namespace

TreePair::TreePair(TreeWord first, TreeWord second) : s(std::move(first)), t(std::move(second)) {
    if (s.size() != t.size()) {
        throw Error(ErrorKind::SizeMismatch, "trees of a pair must have the same size (" +
                                                 std::to_string(s.size()) + " vs " +
                                                 std::to_string(t.size()) + ")");
    }
}

TreePair parse_pair(std::string_view text) {
    const auto space = text.find(' ');
    if (space == std::string_view::npos || text.find(' ', space + 1) != std::string_view::npos) {
        throw Error(ErrorKind::MalformedWord,
                    "expected two words separated by one space: \"" + std::string(text) + "\"");
    }
    return TreePair(TreeWord::parse(text.substr(0, space)), TreeWord::parse(text.substr(space + 1)));
}

std::string to_string(const TreePair& pair) { return pair.s.str() + " " + pair.t.str(); }

TreeWord rotate(const TreeWord& word, NodeRef node) {
    if (!word.contains(node)) throw Error(ErrorKind::MalformedWord, "node index out of range");
    const TreeShape shape(word);
    if (shape.is_root(node.index)) throw Error(ErrorKind::NoParent, "the root cannot be rotated");
    if (!shape.is_internal(node.index)) {
        throw Error(ErrorKind::NotInternal, "a leaf cannot be rotated");
    }
    return TreeWord::trusted(rotate_at(word.str(), shape, node.index));
}

std::vector<TreeWord> rotation_neighbors(const TreeWord& word) {
    auto out = unsorted_rotation_neighbors(word);
    std::sort(out.begin(), out.end());
    return out;
}

int exact_distance(const TreePair& pair, int max_size) {
    if (pair.size() > max_size) {
        throw Error(ErrorKind::SizeGuardExceeded,
                    "pair size " + std::to_string(pair.size()) + " exceeds distance guard " +
                        std::to_string(max_size));
    }
    if (pair.s == pair.t) return 0;

    std::unordered_map<TreeWord, int> seen[2];
    std::vector<TreeWord> frontier[2] = {{pair.s}, {pair.t}};
    int depth[2] = {0, 0};
    seen[0].emplace(pair.s, 0);
    seen[1].emplace(pair.t, 0);

    while (!frontier[0].empty() && !frontier[1].empty()) {
        const int side = frontier[0].size() <= frontier[1].size() ? 0 : 1;
        const auto& other = seen[1 - side];
        std::vector<TreeWord> next;
        int best = INT_MAX;
        for (const auto& word : frontier[side]) {
            for (auto& neighbor : unsorted_rotation_neighbors(word)) {
                if (!seen[side].emplace(neighbor, depth[side] + 1).second) continue;
                if (auto hit = other.find(neighbor); hit != other.end()) {
                    best = std::min(best, depth[side] + 1 + hit->second);
                }
                next.push_back(std::move(neighbor));
            }
        }
        if (best != INT_MAX) return best;
        ++depth[side];
        frontier[side] = std::move(next);
    }
    throw std::logic_error("rotation graph search exhausted without meeting");
}

IntervalSet common_intervals(const TreePair& pair) {
    const IntervalSet a = intervals(pair.s, false);
    const IntervalSet b = intervals(pair.t, false);
    IntervalSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
    return out;
}

std::vector<OneOffMove> one_off_moves(const TreePair& pair) {
    std::vector<OneOffMove> out;
    append_moves(pair.s, intervals(pair.t, false), Side::S, out);
    append_moves(pair.t, intervals(pair.s, false), Side::T, out);
    return out;
}

bool is_difficult(const TreePair& pair) {
    return pair.s != pair.t && common_intervals(pair).empty() && one_off_moves(pair).empty();
}

bool is_difficult(const IndexedTree& s, const IndexedTree& t) noexcept {
    if (s.word == t.word) return false;
    for (const Interval iv : s.intervals) {
        if (t.interval_table.contains(iv) || t.one_interval_table.contains(iv)) return false;
    }
    for (const Interval iv : s.one_intervals) {
        if (t.interval_table.contains(iv)) return false;
    }
    return true;
}

std::pair<TreePair, TreePair> split_at_common(const TreePair& pair, Interval c) {
    const TreeShape s_shape(pair.s);
    const TreeShape t_shape(pair.t);
    const auto s_node = find_node(s_shape, c);
    const auto t_node = find_node(t_shape, c);
    if (!s_node || !t_node) {
        throw Error(ErrorKind::NotCommon, to_string(c) + " is not a common interval of the pair");
    }
    auto cut = [](const TreeWord& word, const TreeShape& shape, std::size_t i) {
        const std::size_t end = shape.subtree_end(i);
        std::string inner = word.str().substr(i, end - i);
        std::string outer = word.str().substr(0, i) + "0" + word.str().substr(end);
        return std::pair{TreeWord::trusted(std::move(inner)), TreeWord::trusted(std::move(outer))};
    };
    auto [s_inner, s_outer] = cut(pair.s, s_shape, *s_node);
    auto [t_inner, t_outer] = cut(pair.t, t_shape, *t_node);
    return {TreePair(std::move(s_inner), std::move(t_inner)),
            TreePair(std::move(s_outer), std::move(t_outer))};
}

ReductionResult reduce(const TreePair& pair) {
    ReductionResult result;
    std::vector<TreePair> work{pair};
    while (!work.empty()) {
        TreePair current = std::move(work.back());
        work.pop_back();
        if (current.s == current.t) continue;

        if (const auto common = common_intervals(current); !common.empty()) {
            auto [inner, outer] = split_at_common(current, *common.begin());
            work.push_back(std::move(outer));
            work.push_back(std::move(inner));
            continue;
        }
        if (const auto moves = one_off_moves(current); !moves.empty()) {
            const OneOffMove& move = moves.front();
            if (move.side == Side::S) {
                current.s = rotate(current.s, move.node);
            } else {
                current.t = rotate(current.t, move.node);
            }
            ++result.forced_moves;
            work.push_back(std::move(current));
            continue;
        }
        result.components.push_back(std::move(current));
    }
    return result;
}

}  // namespace hardpairs
