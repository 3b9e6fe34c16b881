// Single agent, arbitrary frames.

#include "reduction_internal.hpp"

namespace epi::detail {

namespace {

Formula symb() { return P("0") | P("1"); }
Formula ab() { return P("a") | P("b"); }
Formula tail() { return ab() & Know(0, !symb()); }
Formula last() { return Diamond(0, P("end")) & Know(0, !P("lp")); }
Formula failed() { return ab() & Know(0, !P("ntF")); }
Formula loop(const std::string &x) { return P(x) & Diamond(0, P("lp")); }

std::string chain(const std::string &x, std::size_t j) { return sub("w", x + "," + std::to_string(j)); }
std::string bitw(char bt, const std::string &x) { return sub("w", std::string(1, bt) + "," + x); }

// Last world of the x-branch: the final chain world, or w_x when q_x is empty.
std::string tip(const std::string &x, const std::string &q) {
    return q.empty() ? "w_" + x : chain(x, q.size());
}

void add_plain(ModelBuilder &b, const std::string &qa, const std::string &qb) {
    for (const char *x : kSides) {
        const std::string &q = std::string(x) == "a" ? qa : qb;
        for (std::size_t j = 1; j <= q.size(); ++j) b.world(chain(x, j), {std::string(1, q[j - 1]), x});
    }
    for (const char *x : kSides) {
        const std::string &q = std::string(x) == "a" ? qa : qb;
        b.edge(0, "w_root", "w_" + std::string(x)).edge(0, "w_" + std::string(x), "w_ntF");
        if (!q.empty()) b.edge(0, "w_" + std::string(x), chain(x, 1));
        for (std::size_t j = 1; j <= q.size(); ++j) {
            b.edge(0, chain(x, j), "w_ntF");
            if (j < q.size()) b.edge(0, chain(x, j), chain(x, j + 1));
        }
    }
}

void add_loop(ModelBuilder &b, const std::string &qa, const std::string &qb) {
    for (const char *x : kSides)
        for (char bt : {'0', '1'}) b.world(bitw(bt, x), {std::string(1, bt), x});
    b.edge(0, "w_root", "w_stg1");
    for (const char *x : kSides) {
        const std::string &q = std::string(x) == "a" ? qa : qb;
        for (char bt : {'0', '1'}) {
            for (char bt2 : {'0', '1'}) b.edge(0, bitw(bt, x), bitw(bt2, x));
            b.edge(0, bitw(bt, x), "w_ntF").edge(0, bitw(bt, x), "w_end").edge(0, bitw(bt, x), "w_lp");
            b.edge(0, tip(x, q), bitw(bt, x));
        }
        b.edge(0, tip(x, q), "w_end");
    }
}

} // namespace

EpistemicState k1_state(const std::string &qa, const std::string &qb, Flavor f) {
    if (f != Flavor::Plain && f != Flavor::Loop)
        throw IllegalFlavor(std::string(to_string(f)) + " is not a K1 flavor");
    ModelBuilder b(1);
    b.world("w_root", {"root"});
    if (f == Flavor::Loop) b.world("w_stg1", {"stg1"});
    b.world("w_a", {"a"}).world("w_b", {"b"});
    if (f == Flavor::Loop) b.world("w_end", {"end"});
    b.world("w_ntF", {"ntF"});
    if (f == Flavor::Loop) b.world("w_lp", {"lp"});
    add_plain(b, qa, qb);
    if (f == Flavor::Loop) add_loop(b, qa, qb);
    return b.build("w_root");
}

EpistemicState k1_initial() {
    ModelBuilder b(1);
    for (const char *p : {"root", "empty", "stg1", "a", "b", "end", "ntF", "lp"})
        b.world(std::string("w_") + p, {p});
    b.edge(0, "w_root", "w_empty");
    add_plain(b, "", "");
    add_loop(b, "", "");
    return b.build("w_root");
}

Formula k1_shorthand(const std::string &name) {
    if (name == "symb") return symb();
    if (name == "tail") return tail();
    if (name == "last") return last();
    if (name == "failed") return failed();
    if (name == "loop_a") return loop("a");
    if (name == "loop_b") return loop("b");
    throw UnknownShorthand("K1 has no shorthand '" + name + "'");
}

EventModel k1_add_block(const PcpInstance &inst, std::size_t i) {
    const auto &[top, bot] = inst.blocks.at(i - 1);
    ActionBuilder b(1);
    b.event("e_s", P("root") & Diamond(0, P("stg1")))
        .event("e_st", P("stg1"))
        .event("e_end", P("end"))
        .event("e_ntF", P("ntF"))
        .event("e_lp", P("lp"));
    for (const char *x : kSides) {
        const std::string &w = std::string(x) == "a" ? top : bot;
        b.event(sub("e", x), P(x) & !last())
            .event(sub("e", std::string(x) + ",lst"), P(x) & last())
            .event(sub("e", std::string("01,") + x), loop(x));
        for (std::size_t j = 1; j <= w.size(); ++j)
            b.event(sub("e", std::string(x) + "," + std::to_string(j)), P(std::string(1, w[j - 1])) & loop(x));
    }
    for (const char *x : kSides) {
        const std::string &w = std::string(x) == "a" ? top : bot;
        const std::string ex = sub("e", x), lst = sub("e", std::string(x) + ",lst"),
                          e01 = sub("e", std::string("01,") + x);
        auto ej = [&](std::size_t j) { return sub("e", std::string(x) + "," + std::to_string(j)); };
        b.edge(0, "e_s", "e_st").edge(0, "e_s", ex).edge(0, "e_s", lst);
        b.edge(0, ex, ex).edge(0, ex, "e_ntF").edge(0, ex, lst);
        b.edge(0, lst, "e_ntF");
        b.edge(0, e01, e01).edge(0, e01, "e_end").edge(0, e01, "e_ntF").edge(0, e01, "e_lp");
        if (w.empty()) {
            b.edge(0, lst, e01).edge(0, lst, "e_end");
        } else {
            b.edge(0, lst, ej(1));
            for (std::size_t j = 1; j <= w.size(); ++j) {
                b.edge(0, ej(j), "e_ntF");
                if (j < w.size()) b.edge(0, ej(j), ej(j + 1));
            }
            b.edge(0, ej(w.size()), "e_end").edge(0, ej(w.size()), e01);
        }
    }
    return b.build("e_s");
}

EventModel k1_next_stage() {
    Formula pre = (Know(0, !P("empty")) & Diamond(0, P("stg1"))) | (ab() & Know(0, !P("lp"))) | P("ntF");
    return ActionBuilder(1).event("e_nx", pre).edge(0, "e_nx", "e_nx").build("e_nx");
}

EventModel k1_remove(const std::string &bt) {
    const std::string e = "e^" + bt;
    return ActionBuilder(1)
        .event(e, (P("root") & Know(0, !P("stg1"))) | (ab() & !tail()))
        .event(e + "_fail", (tail() & !P(bt)) | failed())
        .event(e + "_ntF", P("ntF"))
        .edge(0, e, e)
        .edge(0, e, e + "_fail")
        .edge(0, e, e + "_ntF")
        .build(e);
}

Formula k1_goal() { return Know(0, !P("empty")) & Know(0, tail() & !failed()); }

bool k1_failed(const EpistemicState &s) {
    return failed_path(s.model, s.designated, P("root") & Know(0, !P("stg1")), ab(), symb(), failed());
}

} // namespace epi::detail
