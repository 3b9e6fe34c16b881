#include "doctest.h"
#include "support.hpp"

#include "epi/formula.hpp"
#include "epi/kripke.hpp"

using namespace epi;

TEST_CASE("empty model is legal") {
    KripkeModel m = make_model({}, 1, {{}}, {});
    CHECK(m.size() == 0);
    CHECK(m.agents() == 1);
}

TEST_CASE("make_model rejects dangling and duplicate worlds") {
    CHECK_THROWS_AS(make_model({"w"}, 1, {{{"w", "w_z"}}}, {}), DanglingWorldRef);
    CHECK_THROWS_AS(make_model({"w"}, 1, {{}}, {{"w_z", {"p"}}}), DanglingWorldRef);
    CHECK_THROWS_AS(make_model({"w", "w"}, 1, {{}}, {}), DuplicateWorld);
}

TEST_CASE("world order is kept as given") {
    KripkeModel m = make_model({"c", "a", "b"}, 1, {{{"c", "a"}}}, {{"a", {"p"}}});
    CHECK(m.worlds() == std::vector<std::string>{"c", "a", "b"});
    CHECK(m.related(0, 0, 1));
    CHECK(m.val(2).empty());
}

TEST_CASE("generated_submodel drops unreachable worlds") {
    auto s = ModelBuilder(1).world("a").world("b").world("junk").edge(0, "a", "b").build("a");
    auto g = generated_submodel(s);
    CHECK(g.model.worlds() == std::vector<std::string>{"a", "b"});
    CHECK(g.designated_name() == "a");
    auto gg = generated_submodel(g);
    CHECK(gg.model.worlds() == g.model.worlds());
}

TEST_CASE("restrict") {
    auto m = ModelBuilder(1).world("a", {"p"}).world("b").world("c").edge(0, "a", "b").edge(0, "b", "c").build();
    CHECK(restrict(m, std::set<std::string>{"a", "b", "c"}).frame().edge_count() == 2);
    CHECK(restrict(m, std::set<std::string>{}).size() == 0);
    auto r = restrict(m, std::set<std::string>{"a", "c"});
    CHECK(r.size() == 2);
    CHECK(r.frame().edge_count() == 0);
    CHECK_THROWS_AS(restrict(m, std::set<std::string>{"zz"}), DanglingWorldRef);
}

TEST_CASE("restrict composes over nested keep sets") {
    epitest::Rng rng(11);
    for (int t = 0; t < 200; ++t) {
        auto s = epitest::random_state(rng, 7, 2);
        std::set<std::string> k1, k12;
        for (const auto &w : s.model.worlds())
            if (epitest::coin(rng, 0.7)) {
                k1.insert(w);
                if (epitest::coin(rng, 0.6)) k12.insert(w);
            }
        auto direct = restrict(s.model, k12);
        auto nested = restrict(restrict(s.model, k1), k12);
        REQUIRE(direct.worlds() == nested.worlds());
        for (AgentId i = 0; i < 2; ++i) CHECK(direct.frame().edges(i) == nested.frame().edges(i));
    }
}

TEST_CASE("generated_submodel preserves truth at the designated world") {
    epitest::Rng rng(12);
    for (int t = 0; t < 300; ++t) {
        auto s = epitest::random_state(rng, 7, 2, 0.15);
        auto g = generated_submodel(s);
        auto f = epitest::random_formula(rng, 3, 2);
        CHECK(evaluate(s, f) == evaluate(g, f));
        CHECK(generated_submodel(g).model.worlds() == g.model.worlds());
    }
}
