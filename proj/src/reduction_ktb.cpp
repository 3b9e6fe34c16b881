// Single agent, reflexive and symmetric frames.

#include "epi/frames.hpp"
#include "reduction_internal.hpp"

namespace epi::detail {

namespace {

const Conditions &ktb() {
    static const Conditions c = profile("KTB").conds;
    return c;
}

Formula ab() { return P("a") | P("b"); }
Formula symb() { return Any({P("0"), P("1"), P("#1"), P("#2")}); }
Formula nxt(const std::string &d) {
    if (d == "0" || d == "1") return P("#1");
    if (d == "#1") return P("#2");
    return P("0") | P("1");
}
Formula last() { return Diamond(0, P("end")) & Know(0, !P("lp")); }
Formula loop(const std::string &x) { return P(x) & Diamond(0, P("lp")); }
Formula tail() {
    Formula body = Not(symb()) & Know(0, !nxt("a"));
    for (const char *d : {"0", "1", "#1", "#2"}) body = body | (P(d) & Know(0, !nxt(d)));
    return ab() & body;
}
Formula failed() { return ab() & Know(0, !P("ntF")); }

std::string wp(const std::string &p, const std::string &x) { return "w_" + p + "(" + x + ")"; }
std::string chain(const std::string &x, std::size_t j, const std::string &suffix = "") {
    return sub("w", x + "," + std::to_string(j) + suffix);
}

const std::string &side(const std::string &x, const std::string &qa, const std::string &qb) {
    return x == "a" ? qa : qb;
}

// Last world of the x-branch chain.
std::string tip(const std::string &x, const std::string &q) {
    return q.empty() ? "w_" + x : chain(x, q.size(), ",#2");
}

void add_plain(ModelBuilder &b, const std::string &qa, const std::string &qb, int drop) {
    for (const char *xs : kSides) {
        const std::string x = xs;
        const std::string &q = side(x, qa, qb);
        const std::size_t n = q.size();
        b.link(0, "w_root", "w_" + x).link(0, "w_" + x, wp("ntF", x));
        std::string prev = "w_" + x;
        auto step = [&](const std::string &w, const std::string &p) {
            b.world(w, {p, x});
            b.link(0, prev, w).link(0, w, wp("ntF", x));
            prev = w;
        };
        for (std::size_t j = 1; j <= n; ++j) {
            // drop = 1 cuts both separators of the last letter, drop = 2 only the second.
            const int keep = j < n ? 2 : 2 - (drop == 1 ? 2 : drop == 2 ? 1 : 0);
            step(chain(x, j), std::string(1, q[j - 1]));
            if (keep >= 1) step(chain(x, j, ",#1"), "#1");
            if (keep >= 2) step(chain(x, j, ",#2"), "#2");
        }
    }
}

void add_loop(ModelBuilder &b, const std::string &qa, const std::string &qb) {
    b.world("w_lp", {"lp"});
    b.link(0, "w_root", "w_stg1");
    for (const char *xs : kSides) {
        const std::string x = xs;
        for (const char *p : {"0", "1", "#1", "#2", "end"}) b.world(wp(p, x), {p, x});
        for (const char *bt : {"0", "1"}) {
            b.link(0, wp(bt, x), wp("#1", x)).link(0, wp("#2", x), wp(bt, x));
            b.link(0, tip(x, side(x, qa, qb)), wp(bt, x));
        }
        b.link(0, wp("#1", x), wp("#2", x));
        for (const char *p : {"0", "1", "#1", "#2"})
            b.link(0, wp(p, x), wp("ntF", x)).link(0, wp(p, x), "w_lp");
        b.link(0, wp("#2", x), wp("end", x)).link(0, tip(x, side(x, qa, qb)), wp("end", x));
    }
}

EpistemicState finish(const ModelBuilder &b) {
    auto s = b.build("w_root");
    return EpistemicState{closure(s.model, ktb()), s.designated};
}

} // namespace

EpistemicState ktb_state(const std::string &qa, const std::string &qb, Flavor f) {
    if (f != Flavor::Plain && f != Flavor::Loop && f != Flavor::MinusHash1 && f != Flavor::MinusHash2)
        throw IllegalFlavor(std::string(to_string(f)) + " is not a KTB1 flavor");
    ModelBuilder b(1);
    b.world("w_root", {"root"});
    if (f == Flavor::Loop) b.world("w_stg1", {"stg1"});
    b.world("w_a", {"a"}).world("w_b", {"b"});
    b.world(wp("ntF", "a"), {"ntF", "a"}).world(wp("ntF", "b"), {"ntF", "b"});
    add_plain(b, qa, qb, f == Flavor::MinusHash1 ? 1 : f == Flavor::MinusHash2 ? 2 : 0);
    if (f == Flavor::Loop) add_loop(b, qa, qb);
    return finish(b);
}

EpistemicState ktb_initial() {
    ModelBuilder b(1);
    for (const char *p : {"root", "empty", "stg1", "a", "b"}) b.world(std::string("w_") + p, {p});
    b.world(wp("ntF", "a"), {"ntF", "a"}).world(wp("ntF", "b"), {"ntF", "b"});
    b.link(0, "w_root", "w_empty");
    add_plain(b, "", "", 0);
    add_loop(b, "", "");
    return finish(b);
}

Formula ktb_shorthand(const std::string &name) {
    if (name == "symb") return symb();
    if (name == "tail") return tail();
    if (name == "last") return last();
    if (name == "failed") return failed();
    if (name == "loop_a") return loop("a");
    if (name == "loop_b") return loop("b");
    for (const char *d : {"0", "1", "#1", "#2", "a", "b"})
        if (name == std::string("nxt(") + d + ")") return nxt(d);
    throw UnknownShorthand("KTB1 has no shorthand '" + name + "'");
}

EventModel ktb_add_block(const PcpInstance &inst, std::size_t i) {
    const auto &[top, bot] = inst.blocks.at(i - 1);
    ActionBuilder b(1);
    b.event("e_s", P("root") & Diamond(0, P("stg1")))
        .event("e_st", P("stg1"))
        .event("e_end", P("end"))
        .event("e_ntF", P("ntF"))
        .event("e_lp", P("lp"));
    b.link(0, "e_s", "e_st");
    std::vector<std::string> loop_events{"e_end", "e_ntF", "e_lp"};
    for (const char *xs : kSides) {
        const std::string x = xs;
        const std::string &w = x == "a" ? top : bot;
        const std::string ex = "e_" + x, lst = sub("e", x + ",lst"), e01 = sub("e", "01," + x),
                          eh = sub("e", "#," + x);
        auto ej = [&](std::size_t j, const std::string &suffix = "") {
            return sub("e", x + "," + std::to_string(j) + suffix);
        };
        b.event(ex, P(x) & !last() & !loop(x) & !P("ntF") & !P("end"))
            .event(lst, P(x) & last() & !P("end"))
            .event(e01, (P("0") | P("1")) & loop(x))
            .event(eh, (P("#1") | P("#2")) & loop(x));
        for (std::size_t j = 1; j <= w.size(); ++j) {
            b.event(ej(j), P(std::string(1, w[j - 1])) & loop(x))
                .event(ej(j, ",#1"), P("#1") & loop(x))
                .event(ej(j, ",#2"), P("#2") & loop(x));
        }
        loop_events.push_back(e01);
        loop_events.push_back(eh);
        b.link(0, "e_s", ex).link(0, "e_s", lst);
        b.link(0, ex, "e_ntF").link(0, ex, lst).link(0, lst, "e_ntF");
        std::string prev = lst;
        for (std::size_t j = 1; j <= w.size(); ++j) {
            for (const std::string &e : {ej(j), ej(j, ",#1"), ej(j, ",#2")}) {
                b.link(0, prev, e).link(0, e, "e_ntF");
                prev = e;
            }
        }
        b.link(0, prev, e01).link(0, prev, "e_end");
    }
    b.clique(0, loop_events);
    return closure(b.build("e_s"), ktb());
}

EventModel ktb_next_stage() {
    Formula pre = (P("root") & Know(0, !P("empty")) & Diamond(0, P("stg1"))) |
                  (ab() & !P("end") & Know(0, !P("lp"))) | P("ntF");
    return closure(ActionBuilder(1).event("e_nx", pre).build("e_nx"), ktb());
}

EventModel ktb_remove(const std::string &bt) {
    const std::string e = "e^" + bt;
    const Formula x = ab() & !P("ntF");
    return closure(ActionBuilder(1)
                       .event(e, (P("root") & Know(0, !P("stg1"))) | (x & !tail()))
                       .event(e + "_fail", x & ((tail() & !P(bt)) | failed()))
                       .event(e + "_ntF", P("ntF"))
                       .link(0, e, e + "_fail")
                       .link(0, e, e + "_ntF")
                       .build(e),
                   ktb());
}

Formula ktb_goal() { return Know(0, !P("empty")) & Know(0, P("root") | (tail() & !failed())); }

bool ktb_failed(const EpistemicState &s) {
    return failed_path(s.model, s.designated, P("root") & Know(0, !P("stg1")), ab(), symb(), failed());
}

} // namespace epi::detail
