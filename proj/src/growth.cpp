#include "hardpairs/growth.hpp"

#include <algorithm>

#include "hardpairs/error.hpp"

namespace hardpairs {

namespace {

std::size_t subtree_end(const std::string& w, std::size_t i) {
    std::size_t open = 1;
    while (open != 0) open += (w[i++] == '1') ? 1 : -1;
    return i;
}

std::string grown(const std::string& w, std::size_t i, GrowSide side) {
    const std::size_t end = subtree_end(w, i);
    std::string out;
    out.reserve(w.size() + 2);
    out.append(w, 0, i);
    if (side == GrowSide::Left) {
        out.push_back('1');
        out.append(w, i, end - i);
        out.push_back('0');
    } else {
        out.append("10");
        out.append(w, i, end - i);
    }
    out.append(w, end, std::string::npos);
    return out;
}

void require_internal_nodes(const TreeWord& word) {
    if (word.size() < 1) {
        throw Error(ErrorKind::SizeTooSmall, "the size-0 tree has no internal nodes");
    }
}

}  // namespace

TreeWord grow(const TreeWord& word, GrowSite site) {
    if (!word.contains(site.node)) throw Error(ErrorKind::MalformedWord, "node index out of range");
    return TreeWord::trusted(grown(word.str(), site.node.index, site.side));
}

std::vector<TreeWord> growth_neighbors(const TreeWord& word) {
    const std::string& w = word.str();
    std::vector<TreeWord> out;
    out.reserve(3 * static_cast<std::size_t>(word.size()) + 1);
    for (std::size_t i = 0; i < w.size(); ++i) {
        out.push_back(TreeWord::trusted(grown(w, i, GrowSide::Left)));
        // Growing a leaf to either side gives the same tree.
        if (w[i] == '1') out.push_back(TreeWord::trusted(grown(w, i, GrowSide::Right)));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

TreeWord remy_sample(int n, Rng& rng) {
    if (n < 0) throw Error(ErrorKind::SizeTooSmall, "tree size must be non-negative");
    if (n == 0) return TreeWord{};
    std::string w = "100";
    for (int k = 1; k < n; ++k) {
        const auto node = static_cast<std::size_t>(rng.below(2 * static_cast<std::uint64_t>(k) + 1));
        const GrowSide side = rng.coin() ? GrowSide::Right : GrowSide::Left;
        w = grown(w, node, side);
    }
    return TreeWord::trusted(std::move(w));
}

NodeRef last_leaf_parent(const TreeWord& word) {
    require_internal_nodes(word);
    const TreeShape shape(word);
    return NodeRef{*shape.parent(shape.length() - 1)};
}

WordSplit word_decompose(const TreeWord& word) {
    const std::size_t omega = last_leaf_parent(word).index;
    return {word.str().substr(0, omega), word.str().substr(omega)};
}

TreeWord sigma(const TreeWord& word) {
    const WordSplit split = word_decompose(word);
    return TreeWord::trusted(split.prefix + "1" + split.suffix + "0");
}

NodeRef growth_injection(const TreeWord& word, NodeRef node) {
    if (!word.contains(node)) throw Error(ErrorKind::MalformedWord, "node index out of range");
    const std::size_t prefix_length = last_leaf_parent(word).index;
    return NodeRef{node.index >= prefix_length ? node.index + 1 : node.index};
}

}  // namespace hardpairs
