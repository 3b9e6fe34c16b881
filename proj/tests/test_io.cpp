#include "doctest.h"
#include "support.hpp"

#include "epi/bisim.hpp"
#include "epi/io.hpp"
#include "epi/reduction.hpp"

using namespace epi;

namespace {

const PcpInstance kRef{{{"1", "101"}, {"10", "00"}, {"011", "11"}}};

template <class T, class R> void fixpoint(const T &x, R read) {
    const std::string once = dump(to_json(x));
    const std::string twice = dump(to_json(read(parse_json(once))));
    CHECK(once == twice);
}

} // namespace

TEST_CASE("model and state documents") {
    auto j = parse_json(R"({"agents": 1, "worlds": ["v", "u"],
        "relations": [[["u", "v"], ["v", "v"]]], "valuation": {"u": ["p"]}, "designated": "u"})");
    auto s = state_from_json(j);
    CHECK(s.designated_name() == "u");
    CHECK(evaluate(s, P("p") & Diamond(0, !P("p"))));
    auto out = to_json(s);
    CHECK(out["worlds"] == Json({"u", "v"}));
    CHECK(out["valuation"]["v"] == Json::array());
    fixpoint(s, state_from_json);
    CHECK_THROWS_AS(state_from_json(parse_json(R"({"agents": 1, "worlds": ["u"], "relations": [[]]})")),
                    FormatError);
    CHECK_THROWS_AS(state_from_json(parse_json(
                        R"({"agents": 2, "worlds": ["u"], "relations": [[]], "designated": "u"})")),
                    FormatError);
    CHECK_THROWS_AS(parse_json("{"), FormatError);
}

TEST_CASE("formula documents") {
    CHECK(formula_from_json("<K{0}> empty") == Diamond(0, P("empty")));
    auto j = parse_json(R"({"op": "know", "agent": 1, "arg": {"op": "or",
        "lhs": {"op": "prop", "name": "p"}, "rhs": {"op": "true"}}})");
    CHECK(formula_from_json(j) == Know(1, P("p") | Top()));
    CHECK_THROWS_AS(formula_from_json(parse_json(R"({"op": "xor"})")), FormatError);
    CHECK_THROWS(formula_from_json("K0 ("));
    epitest::Rng rng(3);
    for (int t = 0; t < 300; ++t) {
        auto f = epitest::random_formula(rng, 3, 2);
        CHECK(formula_from_json(to_json(f)) == f);
        CHECK(formula_from_json(parse_json(dump(to_json(f)))) == f);
    }
}

TEST_CASE("action and pcp documents") {
    epitest::Rng rng(4);
    for (int t = 0; t < 50; ++t) {
        auto a = epitest::random_action(rng, 4, 2);
        auto b = action_from_json(to_json(a));
        CHECK(b.events().size() == a.events().size());
        CHECK(b.frame().edge_count() == a.frame().edge_count());
        CHECK(b.name(b.designated()) == a.name(a.designated()));
        fixpoint(a, action_from_json);
    }
    auto unbounded = ActionBuilder(1).event("e", Know(0, Know(0, P("p")))).build("e", std::nullopt);
    CHECK_FALSE(action_from_json(to_json(unbounded)).depth_bound().has_value());
    CHECK(pcp_from_json(to_json(kRef)).blocks == kRef.blocks);
    CHECK_THROWS_AS(pcp_from_json(parse_json(R"({"blocks": [["12", "1"]]})")), FormatError);
}

TEST_CASE("problem documents round trip for every variant") {
    for (auto v : {Variant::K1, Variant::MultiS5, Variant::KTB1, Variant::S4_1}) {
        auto p = reduce(kRef, v);
        auto q = problem_from_json(parse_json(dump(to_json(p))));
        CHECK(bisimilar(q.initial, p.initial));
        CHECK(q.goal == p.goal);
        CHECK(q.logic == p.logic);
        CHECK(q.variant == p.variant);
        CHECK(q.actions.size() == p.actions.size());
        CHECK(q.pcp->blocks == kRef.blocks);
        fixpoint(p, problem_from_json);
    }
    auto s = sat_to_ep(P("p") & !P("q"));
    s.logic = profile(Conditions{FrameCondition::Euclidean});
    auto j = to_json(s);
    CHECK(j["logic"] == Json({"euclidean"}));
    CHECK_FALSE(j.contains("meta"));
    CHECK(problem_from_json(j).logic == s.logic);
}
