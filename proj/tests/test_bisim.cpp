#include "doctest.h"
#include "support.hpp"

#include "epi/bisim.hpp"

using namespace epi;

TEST_CASE("total relation with equal valuations collapses to one block") {
    auto m = ModelBuilder(1).world("a", {"p"}).world("b", {"p"}).world("c", {"p"}).clique(0, {"a", "b", "c"}).build();
    CHECK(coarsest_bisimulation(m).count == 1);
}

TEST_CASE("discrete model is all singletons") {
    auto m = ModelBuilder(2).world("a", {"p"}).world("b", {"q"}).world("c").build();
    CHECK(coarsest_bisimulation(m).count == 3);
}

TEST_CASE("duplicate worlds merge in the quotient") {
    auto s = ModelBuilder(1)
                 .world("r")
                 .world("x", {"p"})
                 .world("y", {"p"})
                 .edge(0, "r", "x")
                 .edge(0, "r", "y")
                 .build("r");
    auto q = quotient(s);
    CHECK(q.model.worlds() == std::vector<std::string>{"r", "x"});
    CHECK(bisimilar(s, q));
    CHECK(canonical_key(s) == canonical_key(q));
    CHECK(quotient(q).model.worlds() == q.model.worlds());
}

TEST_CASE("bisimilar needs equal agent counts") {
    auto a = ModelBuilder(1).world("a").build("a");
    auto b = ModelBuilder(2).world("a").build("a");
    CHECK_THROWS_AS(bisimilar(a, b), AgentMismatch);
}

TEST_CASE("refinement reaches a fixpoint") {
    epitest::Rng rng(31);
    for (int t = 0; t < 300; ++t) {
        auto s = epitest::random_state(rng, 8, 2);
        auto p = coarsest_bisimulation(s.model);
        // every pair in a block has matching successor blocks
        for (NodeIx u = 0; u < s.model.size(); ++u)
            for (NodeIx v = 0; v < s.model.size(); ++v) {
                if (p.block[u] != p.block[v]) continue;
                for (AgentId i = 0; i < 2; ++i) {
                    std::set<NodeIx> bu, bv;
                    for (auto w : s.model.succ(i, u)) bu.insert(p.block[w]);
                    for (auto w : s.model.succ(i, v)) bv.insert(p.block[w]);
                    CHECK(bu == bv);
                }
            }
    }
}

TEST_CASE("quotient properties") {
    epitest::Rng rng(32);
    for (int t = 0; t < 300; ++t) {
        auto s = epitest::random_state(rng, 8, 2);
        auto q = quotient(s);
        CHECK(epitest::naive_bisimilar(s, q));
        auto qq = quotient(q);
        CHECK(qq.model.size() == q.model.size());
        CHECK(canonical_key(qq) == canonical_key(q));
    }
}

TEST_CASE("bisimilar and canonical_key agree with the naive oracle") {
    epitest::Rng rng(33);
    int same = 0;
    for (int t = 0; t < 3000; ++t) {
        auto a = epitest::random_state(rng, 5, 2, 0.3, {"p"});
        auto b = epitest::coin(rng) ? quotient(a) : epitest::random_state(rng, 5, 2, 0.3, {"p"});
        bool truth = epitest::naive_bisimilar(a, b);
        CHECK(bisimilar(a, b) == truth);
        CHECK((canonical_key(a) == canonical_key(b)) == truth);
        same += truth;
    }
    CHECK(same > 100);
}

TEST_CASE("canonical key ignores world names and order") {
    auto s = ModelBuilder(1).world("a", {"p"}).world("b").edge(0, "a", "b").edge(0, "b", "b").build("a");
    auto t = ModelBuilder(1).world("z").world("y", {"p"}).edge(0, "y", "z").edge(0, "z", "z").build("y");
    CHECK(canonical_key(s) == canonical_key(t));
    CHECK(to_hex(canonical_key(s)).find_first_not_of("0123456789abcdef") == std::string::npos);
}
