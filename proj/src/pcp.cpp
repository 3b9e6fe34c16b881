#include "epi/pcp.hpp"

#include <algorithm>
#include <functional>

#include "epi/error.hpp"

namespace epi {

void validate(const PcpInstance &inst) {
    if (inst.blocks.empty()) throw FormatError("PCP instance needs at least one block");
    auto binary = [](const std::string &w) {
        return std::all_of(w.begin(), w.end(), [](char c) { return c == '0' || c == '1'; });
    };
    for (const auto &[a, b] : inst.blocks)
        if (!binary(a) || !binary(b)) throw FormatError("PCP words must be over {0,1}");
}

std::optional<Match> brute_force_match(const PcpInstance &inst, std::size_t max_len) {
    validate(inst);
    Match cur;
    // top and bottom never both extend past the common prefix, so the
    // unmatched remainder is one word owned by one side.
    std::function<bool(std::size_t, const std::string &, bool)> dfs =
        [&](std::size_t len, const std::string &rest, bool top_ahead) -> bool {
        if (cur.size() == len) return rest.empty();
        for (std::size_t i = 0; i < inst.blocks.size(); ++i) {
            std::string top = top_ahead ? rest + inst.blocks[i].first : inst.blocks[i].first;
            std::string bot = top_ahead ? inst.blocks[i].second : rest + inst.blocks[i].second;
            std::size_t k = std::min(top.size(), bot.size());
            if (top.compare(0, k, bot, 0, k) != 0) continue;
            cur.push_back(i + 1);
            bool ahead = top.size() >= bot.size();
            if (dfs(len, ahead ? top.substr(k) : bot.substr(k), ahead)) return true;
            cur.pop_back();
        }
        return false;
    };
    for (std::size_t len = 1; len <= max_len; ++len) {
        cur.clear();
        if (dfs(len, "", true)) return cur;
    }
    return std::nullopt;
}

std::string matched_word(const PcpInstance &inst, const Match &m) {
    if (m.empty()) throw NotAMatch("empty index sequence");
    std::string top, bot;
    for (std::size_t i : m) {
        if (i < 1 || i > inst.blocks.size()) throw NotAMatch("index " + std::to_string(i) + " out of range");
        top += inst.blocks[i - 1].first;
        bot += inst.blocks[i - 1].second;
    }
    if (top != bot) throw NotAMatch(top + " != " + bot);
    return top;
}

} // namespace epi
