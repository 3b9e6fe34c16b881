#include "doctest.h"
#include "support.hpp"

#include <algorithm>
#include <functional>

#include "epi/error.hpp"
#include "epi/pcp.hpp"

using namespace epi;

namespace {

/// Exhaustive enumeration without pruning; collects every match up to max_len.
std::vector<Match> all_matches(const PcpInstance &inst, std::size_t max_len) {
    std::vector<Match> out;
    Match cur;
    std::function<void()> go = [&] {
        if (!cur.empty()) {
            std::string t, b;
            for (auto i : cur) {
                t += inst.blocks[i - 1].first;
                b += inst.blocks[i - 1].second;
            }
            if (t == b) out.push_back(cur);
        }
        if (cur.size() == max_len) return;
        for (std::size_t i = 1; i <= inst.blocks.size(); ++i) {
            cur.push_back(i);
            go();
            cur.pop_back();
        }
    };
    go();
    std::sort(out.begin(), out.end(), [](const Match &a, const Match &b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return out;
}

std::string random_word(epitest::Rng &rng, std::size_t max_len) {
    std::string w;
    std::size_t n = epitest::pick(rng, max_len + 1);
    for (std::size_t i = 0; i < n; ++i) w += epitest::coin(rng) ? '1' : '0';
    return w;
}

} // namespace

TEST_CASE("single equal block") {
    PcpInstance inst{{{"01", "01"}}};
    CHECK(brute_force_match(inst, 3) == Match{1});
    CHECK(matched_word(inst, {1}) == "01");
}

TEST_CASE("first symbols differ") {
    PcpInstance inst{{{"0", "1"}}};
    CHECK_FALSE(brute_force_match(inst, 8).has_value());
}

TEST_CASE("three block reference instance") {
    PcpInstance inst{{{"1", "101"}, {"10", "00"}, {"011", "11"}}};
    auto oracle = all_matches(inst, 4);
    REQUIRE(!oracle.empty());
    CHECK(oracle.front() == Match{1, 3, 2, 3});
    CHECK(brute_force_match(inst, 4) == Match{1, 3, 2, 3});
    CHECK(matched_word(inst, {1, 3, 2, 3}) == "101110011");
    CHECK_FALSE(brute_force_match(inst, 3).has_value());
    CHECK_THROWS_AS(matched_word(inst, {1, 2}), NotAMatch);
}

TEST_CASE("empty words are allowed") {
    PcpInstance inst{{{"", ""}}};
    CHECK(brute_force_match(inst, 2) == Match{1});
    CHECK(matched_word(inst, {1}).empty());
    PcpInstance inst2{{{"", "1"}, {"1", ""}}};
    CHECK(brute_force_match(inst2, 2) == Match{1, 2});
}

TEST_CASE("invalid instances") {
    CHECK_THROWS_AS(brute_force_match(PcpInstance{}, 2), FormatError);
    CHECK_THROWS_AS(brute_force_match(PcpInstance{{{"2", "1"}}}, 2), FormatError);
}

TEST_CASE("agrees with exhaustive enumeration") {
    epitest::Rng rng(51);
    for (int t = 0; t < 300; ++t) {
        PcpInstance inst;
        std::size_t n = 1 + epitest::pick(rng, 3);
        for (std::size_t i = 0; i < n; ++i) inst.blocks.emplace_back(random_word(rng, 3), random_word(rng, 3));
        auto oracle = all_matches(inst, 4);
        auto got = brute_force_match(inst, 4);
        REQUIRE(got.has_value() == !oracle.empty());
        if (got) {
            CHECK(*got == oracle.front());
            CHECK_NOTHROW(matched_word(inst, *got));
            CHECK(brute_force_match(inst, 4) == got);
        }
    }
}
