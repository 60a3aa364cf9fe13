#include "hardpairs/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hardpairs/enumeration.hpp"
#include "hardpairs/error.hpp"
#include "hardpairs/growth.hpp"
#include "hardpairs/rotation.hpp"
#include "hardpairs/sampler.hpp"
#include "hardpairs/stats.hpp"

namespace hardpairs::cli {

namespace {

// A pair may be given as one quoted "s t" argument or as two arguments.
TreePair pair_from_args(const std::vector<std::string>& parts) {
    std::string text;
    for (const auto& part : parts) text += (text.empty() ? "" : " ") + part;
    return parse_pair(text);
}

std::string side_name(Side side) { return side == Side::S ? "S" : "T"; }

std::string verdict(const TreePair& pair) {
    if (pair.s == pair.t) return "not difficult: identical";
    if (const auto common = common_intervals(pair); !common.empty()) {
        return "not difficult: common " + to_string(*common.begin());
    }
    if (const auto moves = one_off_moves(pair); !moves.empty()) {
        const OneOffMove& move = moves.front();
        return "not difficult: one-off (" + side_name(move.side) + ",@" +
               std::to_string(move.node.index) + ")->" + to_string(move.created);
    }
    return "difficult";
}

std::vector<TreePair> read_pair_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::MalformedWord, "cannot open " + path);
    std::vector<TreePair> pairs;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.front() == '#') continue;
        pairs.push_back(parse_pair(line));
    }
    return pairs;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Difficult rotation-distance tree pairs: sampling, checking and census tools",
                 "hardpairs"};
    app.require_subcommand(1);

    int size = 0;
    std::uint64_t count = 1;
    std::uint64_t seed = kDefaultSeed;
    std::string format = "words";
    auto* sample = app.add_subcommand("sample", "Draw difficult pairs (seeds S, S+1, ...)");
    sample->add_option("--size", size, "Tree size (>= 4)")->required();
    sample->add_option("--count", count, "Number of pairs")->capture_default_str();
    sample->add_option("--seed", seed, "First seed")->capture_default_str();
    sample->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"words", "jsonl"}))
        ->capture_default_str();

    std::vector<std::string> pair_args;
    std::string pair_file;
    auto* check = app.add_subcommand("check", "Report whether pairs are difficult, with a witness");
    auto* check_pair = check->add_option("pair", pair_args, "Pair \"s t\"")->expected(1, 2);
    check->add_option("--file", pair_file, "File of pair lines ('#' comments ignored)")
        ->excludes(check_pair);

    int max_size = kDefaultDistanceGuard;
    auto* distance = app.add_subcommand("distance", "Exact rotation distance");
    distance->add_option("pair", pair_args, "Pair \"s t\"")->expected(1, 2)->required();
    distance->add_option("--max-size", max_size, "Size guard for the search")->capture_default_str();

    auto* reduce_cmd = app.add_subcommand("reduce", "Forced moves and difficult components");
    reduce_cmd->add_option("pair", pair_args, "Pair \"s t\"")->expected(1, 2)->required();

    bool difficult_only = false;
    auto* enumerate = app.add_subcommand("enumerate", "Census of trees or difficult pairs");
    enumerate->add_option("--size", size, "Tree size")->required();
    enumerate->add_flag("--difficult", difficult_only, "List difficult pairs instead of trees");

    std::string word_text;
    bool rotation_flag = false;
    bool growth_flag = false;
    auto* neighbors = app.add_subcommand("neighbors", "Rotation or growth neighbours of a tree");
    neighbors->add_option("word", word_text, "Tree word")->required();
    auto* rot_opt = neighbors->add_flag("--rotation", rotation_flag, "Rotation neighbours (default)");
    neighbors->add_flag("--growth", growth_flag, "Growth neighbours")->excludes(rot_opt);

    std::uint64_t samples = 0;
    std::string report_format = "text";
    auto* coverage = app.add_subcommand("coverage", "Sampling coverage of DPS at one size");
    coverage->add_option("--size", size, "Tree size (>= 4)")->required();
    coverage->add_option("--samples", samples, "Number of draws")->required();
    coverage->add_option("--seed", seed, "Seed")->capture_default_str();
    coverage->add_option("--format", report_format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    auto* profile = app.add_subcommand("profile", "Reduction profile of uniform random pairs");
    profile->add_option("--size", size, "Tree size (>= 4)")->required();
    profile->add_option("--samples", samples, "Number of pairs")->required();
    profile->add_option("--seed", seed, "Seed")->capture_default_str();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }

    try {
        if (*sample) {
            for (std::uint64_t i = 0; i < count; ++i) {
                const std::uint64_t draw_seed = seed + i;
                const TreePair pair = dps_sample(DpsConfig{size, draw_seed});
                if (format == "jsonl") {
                    const nlohmann::json record = {
                        {"n", size}, {"s", pair.s.str()}, {"t", pair.t.str()}, {"seed", draw_seed}};
                    out << record.dump() << '\n';
                } else {
                    out << to_string(pair) << '\n';
                }
            }
        } else if (*check) {
            if (pair_file.empty() && pair_args.empty()) {
                err << "error: check needs a pair or --file\n";
                return kUsageError;
            }
            const auto pairs = pair_file.empty() ? std::vector<TreePair>{pair_from_args(pair_args)}
                                                 : read_pair_file(pair_file);
            for (const auto& pair : pairs) out << verdict(pair) << '\n';
        } else if (*distance) {
            out << exact_distance(pair_from_args(pair_args), max_size) << '\n';
        } else if (*reduce_cmd) {
            const ReductionResult result = reduce(pair_from_args(pair_args));
            out << "forced_moves " << result.forced_moves << '\n';
            for (const auto& component : result.components) out << to_string(component) << '\n';
        } else if (*enumerate) {
            if (difficult_only) {
                write_census(out, size, enumerate_difficult_pairs(size));
            } else {
                const auto trees = enumerate_trees(size);
                out << "# n=" << size << " count=" << trees.size() << '\n';
                for (const auto& tree : trees) out << tree.str() << '\n';
            }
        } else if (*neighbors) {
            const TreeWord word = parse_word(word_text);
            for (const auto& tree : growth_flag ? growth_neighbors(word) : rotation_neighbors(word)) {
                out << tree.str() << '\n';
            }
        } else if (*coverage) {
            if (size < 4) throw Error(ErrorKind::SizeTooSmall, "size must be >= 4");
            Rng rng(seed);
            const CoverageReport report = coverage_report(size, samples, rng);
            out << (report_format == "json" ? to_json(report) : to_key_value(report));
        } else if (*profile) {
            if (size < 4) throw Error(ErrorKind::SizeTooSmall, "size must be >= 4");
            Rng rng(seed);
            out << to_key_value(reduction_profile(size, samples, rng));
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kDomainError;
    }
    return kSuccess;
}

}  // namespace hardpairs::cli
