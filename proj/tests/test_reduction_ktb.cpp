#include "doctest.h"
#include "support.hpp"

#include "epi/bisim.hpp"
#include "epi/frames.hpp"
#include "epi/reduction.hpp"

using namespace epi;

namespace {

const PcpInstance kRef{{{"1", "101"}, {"10", "00"}, {"011", "11"}}};
const auto v = Variant::KTB1;

std::string random_bits(epitest::Rng &rng, std::size_t max_len) {
    std::string w;
    std::size_t n = epitest::pick(rng, max_len + 1);
    for (std::size_t i = 0; i < n; ++i) w += epitest::coin(rng) ? '1' : '0';
    return w;
}

bool ktb(const EpistemicState &s) { return satisfies(s.model, profile("KTB").conds); }

EpistemicState upd(const EpistemicState &s, const EventModel &a) {
    REQUIRE(applicable(s, a));
    auto out = product_update(s, a);
    CHECK(ktb(out));
    return out;
}

} // namespace

TEST_CASE("KTB1 initial state and families") {
    auto s = initial_state(v);
    CHECK(s.model.agents() == 1);
    CHECK(ktb(s));
    CHECK_FALSE(satisfies(s.model, profile("S4").conds));
    CHECK(evaluate(s, P("root") & Diamond(0, P("empty")) & Diamond(0, P("stg1"))));
    auto l = oracle_state(v, "10", "", Flavor::Loop);
    CHECK(ktb(l));
    const auto &m = l.model;
    CHECK(m.related(0, m.index_of("w_{a,2,#2}"), m.index_of("w_0(a)")));
    CHECK(m.related(0, m.index_of("w_b"), m.index_of("w_end(b)")));
    CHECK(m.related(0, m.index_of("w_lp"), m.index_of("w_#1(b)")));
    CHECK_FALSE(m.related(0, m.index_of("w_{a,1,#2}"), m.index_of("w_0(a)")));
    auto h2 = oracle_state(v, "10", "0", Flavor::MinusHash2);
    CHECK_FALSE(h2.model.contains("w_{a,2,#2}"));
    CHECK(h2.model.contains("w_{a,2,#1}"));
    auto h1 = oracle_state(v, "10", "0", Flavor::MinusHash1);
    CHECK_FALSE(h1.model.contains("w_{b,1,#1}"));
    CHECK(h1.model.contains("w_{b,1}"));
    CHECK_THROWS_AS(oracle_state(v, "", "", Flavor::MinusHash), IllegalFlavor);
}

TEST_CASE("KTB1 shorthands") {
    auto s = oracle_state(v, "01", "", Flavor::Plain);
    for (const auto &w : s.model.worlds()) {
        INFO(w);
        CHECK(evaluate_at(s, w, shorthand(v, "tail")) == (w == "w_{a,2,#2}" || w == "w_b" || w == "w_ntF(b)"));
        CHECK_FALSE(evaluate_at(s, w, shorthand(v, "failed")));
    }
    auto l = oracle_state(v, "01", "", Flavor::Loop);
    for (const auto &w : l.model.worlds()) {
        INFO(w);
        CHECK(evaluate_at(l, w, shorthand(v, "last")) == (w == "w_{a,2,#2}" || w == "w_b" ||
                                                        w == "w_end(a)" || w == "w_end(b)"));
    }
    CHECK(evaluate_at(l, "w_#1(a)", shorthand(v, "loop_a")));
    CHECK_FALSE(evaluate_at(l, "w_a", shorthand(v, "loop_a")));
    CHECK_THROWS_AS(shorthand(v, "okstate"), UnknownShorthand);
}

TEST_CASE("KTB1 reduce") {
    auto prob = reduce(kRef, v);
    CHECK(prob.actions.size() == 3 + 1 + 4);
    CHECK(prob.logic.name == "KTB");
    for (const auto &[n, a] : prob.actions) {
        CHECK(a.max_depth() <= 1);
        CHECK(satisfies(a.frame(), profile("KTB").conds));
    }
    CHECK(applicable(prob.initial, prob.actions.at("ad_1")));
    CHECK_FALSE(applicable(prob.initial, prob.actions.at("next_stage")));
    CHECK_FALSE(applicable(prob.initial, prob.actions.at("remove_#2")));
    CHECK_FALSE(evaluate(prob.initial, prob.goal));
    CHECK(evaluate(oracle_state(v, "", "", Flavor::Plain), prob.goal));
}

TEST_CASE("KTB1 witness plan") {
    auto prob = reduce(kRef, v);
    auto plan = match_to_plan(kRef, {1, 3, 2, 3}, v);
    CHECK(plan.size() == 4 + 1 + 27);
    CHECK(plan_to_match(plan, v) == Match{1, 3, 2, 3});
    auto r = apply_plan(prob.initial, prob.actions, plan, true);
    REQUIRE(std::holds_alternative<EpistemicState>(r));
    auto fin = std::get<EpistemicState>(r);
    CHECK(evaluate(fin, prob.goal));
    CHECK(bisimilar(fin, oracle_state(v, "", "", Flavor::Plain)));
    Plan short_plan(plan.begin(), plan.end() - 3);
    auto r2 = apply_plan(prob.initial, prob.actions, short_plan, true);
    REQUIRE(std::holds_alternative<EpistemicState>(r2));
    CHECK_FALSE(evaluate(std::get<EpistemicState>(r2), prob.goal));
    CHECK(bisimilar(std::get<EpistemicState>(r2), oracle_state(v, "1", "1", Flavor::Plain)));
}

TEST_CASE("KTB1 lemmas on random words") {
    epitest::Rng rng(71);
    PcpInstance inst;
    for (int i = 0; i < 3; ++i) inst.blocks.emplace_back(random_bits(rng, 3), random_bits(rng, 3));
    inst.blocks.emplace_back("", "1");
    auto ns = next_stage_action(v);
    auto r2 = remove_action(v, "#2"), r1 = remove_action(v, "#1");
    for (int t = 0; t < 30; ++t) {
        auto qa = random_bits(rng, 4), qb = random_bits(rng, 4);
        INFO("qa=" << qa << " qb=" << qb);
        auto loop = oracle_state(v, qa, qb, Flavor::Loop);
        for (std::size_t i = 1; i <= inst.blocks.size(); ++i) {
            auto ad = add_block_action(v, inst, i);
            const auto &[ta, tb] = inst.blocks[i - 1];
            INFO("block " << ta << "/" << tb);
            CHECK(bisimilar(upd(loop, ad), oracle_state(v, qa + ta, qb + tb, Flavor::Loop)));
            CHECK(bisimilar(upd(initial_state(v), ad), upd(oracle_state(v, "", "", Flavor::Loop), ad)));
        }
        auto plain = oracle_state(v, qa, qb, Flavor::Plain);
        CHECK(bisimilar(upd(loop, ns), plain));
        CHECK_FALSE(failed_state_check(plain, v));
        if (!qa.empty() && !qb.empty()) {
            auto h2 = oracle_state(v, qa, qb, Flavor::MinusHash2);
            CHECK(bisimilar(upd(plain, r2), h2));
            CHECK(bisimilar(upd(h2, r1), oracle_state(v, qa, qb, Flavor::MinusHash1)));
            CHECK(failed_state_check(upd(plain, r1), v));
        }
        for (const std::string bt : {"0", "1"}) {
            auto rm = remove_action(v, bt);
            CHECK(bisimilar(upd(oracle_state(v, qa + bt, qb + bt, Flavor::MinusHash1), rm), plain));
            auto bad = upd(oracle_state(v, qa + (bt == "0" ? "1" : "0"), qb, Flavor::MinusHash1), rm);
            CHECK(failed_state_check(bad, v));
            CHECK_FALSE(evaluate(bad, goal_formula(v)));
            for (const auto &a : {r2, r1, rm})
                if (applicable(bad, a)) CHECK(failed_state_check(product_update(bad, a), v));
        }
    }
}
