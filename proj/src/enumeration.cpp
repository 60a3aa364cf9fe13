#include "hardpairs/enumeration.hpp"

#include <ostream>

#include "hardpairs/error.hpp"

namespace hardpairs {

namespace {

void check_guard(int n, int max_size, const char* what) {
    if (n < 0) throw Error(ErrorKind::SizeTooSmall, "size must be non-negative");
    if (n > max_size) {
        throw Error(ErrorKind::SizeGuardExceeded, std::string(what) + " size " + std::to_string(n) +
                                                      " exceeds guard " + std::to_string(max_size));
    }
}

// Depth-first over positions, '0' before '1', so output is lexicographic.
void extend(std::string& prefix, int n, int ones, int zeros, std::vector<TreeWord>& out) {
    if (static_cast<int>(prefix.size()) == 2 * n + 1) {
        out.push_back(TreeWord::trusted(prefix));
        return;
    }
    if (zeros < ones || (zeros == n && ones == n)) {
        prefix.push_back('0');
        extend(prefix, n, ones, zeros + 1, out);
        prefix.pop_back();
    }
    if (ones < n) {
        prefix.push_back('1');
        extend(prefix, n, ones + 1, zeros, out);
        prefix.pop_back();
    }
}

}  // namespace

std::uint64_t catalan(int n) {
    std::uint64_t c = 1;
    for (int k = 0; k < n; ++k) c = c * 2 * (2 * static_cast<std::uint64_t>(k) + 1) / (k + 2);
    return c;
}

std::vector<TreeWord> enumerate_trees(int n, int max_size) {
    check_guard(n, max_size, "tree enumeration");
    std::vector<TreeWord> out;
    out.reserve(catalan(n));
    std::string prefix;
    prefix.reserve(2 * static_cast<std::size_t>(n) + 1);
    extend(prefix, n, 0, 0, out);
    return out;
}

std::vector<TreePair> enumerate_difficult_pairs(int n, int max_size) {
    check_guard(n, max_size, "pair enumeration");
    std::vector<IndexedTree> trees;
    for (auto& word : enumerate_trees(n, std::max(n, kTreeEnumerationGuard))) {
        trees.emplace_back(std::move(word));
    }
    std::vector<TreePair> out;
    for (const auto& s : trees) {
        for (const auto& t : trees) {
            if (is_difficult(s, t)) out.emplace_back(s.word, t.word);
        }
    }
    return out;
}

const std::vector<TreePair>& primitive_pairs() {
    // Frozen from enumerate_difficult_pairs(4), keeping the s < t member of
    // each swapped couple.
    static const std::vector<TreePair> table = [] {
        const char* const rows[][2] = {
            {"101011000", "111010000"},
            {"101100100", "111001000"},
            {"101101000", "111000100"},
            {"110010100", "110110000"},
        };
        std::vector<TreePair> out;
        for (const auto& row : rows) out.emplace_back(TreeWord::parse(row[0]), TreeWord::parse(row[1]));
        return out;
    }();
    return table;
}

void write_census(std::ostream& out, int n, const std::vector<TreePair>& pairs) {
    out << "# n=" << n << " count=" << pairs.size() << '\n';
    for (const auto& pair : pairs) out << to_string(pair) << '\n';
}

}  // namespace hardpairs
