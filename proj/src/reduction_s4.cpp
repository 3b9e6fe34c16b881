// Single agent, reflexive and transitive frames. Blocks are written in front
// of the encoding, right after the loop.

#include "epi/frames.hpp"
#include "reduction_internal.hpp"

namespace epi::detail {

namespace {

const Conditions &s4() {
    static const Conditions c = profile("S4").conds;
    return c;
}

Formula ab() { return P("a") | P("b"); }
Formula symb() { return Any({P("0"), P("1"), P("#")}); }
Formula nxt(const std::string &d) {
    if (d == "0" || d == "1") return P("#");
    return P("0") | P("1");
}
Formula loop(const std::string &x) { return P(x) & Diamond(0, P("lp")); }
Formula tail() {
    Formula body = False();
    for (const char *d : {"0", "1", "#"}) body = body | (P(d) & Know(0, !nxt(d)));
    return symb() & body;
}
Formula failed() { return ab() & symb() & Know(0, symb()); }

std::string wp(const std::string &p, const std::string &x) { return "w_" + p + "(" + x + ")"; }
std::string chain(const std::string &x, std::size_t j, const std::string &suffix = "") {
    return sub("w", x + "," + std::to_string(j) + suffix);
}

void add_plain(ModelBuilder &b, const std::string &qa, const std::string &qb, bool minus_hash) {
    for (const char *xs : kSides) {
        const std::string x = xs;
        const std::string &q = x == "a" ? qa : qb;
        const std::size_t n = q.size();
        b.edge(0, "w_root", "w_" + x);
        for (std::size_t j = 1; j <= n; ++j) {
            b.world(chain(x, j), {std::string(1, q[j - 1]), x});
            b.edge(0, "w_root", chain(x, j)).edge(0, chain(x, j), "w_" + x);
            if (j == n && minus_hash) break;
            b.world(chain(x, j, ",#"), {"#", x});
            b.edge(0, chain(x, j), chain(x, j, ",#")).edge(0, chain(x, j, ",#"), "w_" + x);
            if (j < n) b.edge(0, chain(x, j, ",#"), chain(x, j + 1));
        }
    }
}

void add_loop(ModelBuilder &b, const std::string &qa, const std::string &qb) {
    b.world("w_lp", {"lp"});
    b.edge(0, "w_root", "w_stg1");
    for (const char *xs : kSides) {
        const std::string x = xs;
        for (const char *p : {"0", "1", "#"}) b.world(wp(p, x), {p, x}).edge(0, wp(p, x), "w_lp");
        for (const char *bt : {"0", "1"})
            b.edge(0, "w_root", wp(bt, x)).edge(0, wp(bt, x), wp("#", x)).edge(0, wp("#", x), wp(bt, x));
        b.edge(0, wp("#", x), "w_" + x);
        if (!(x == "a" ? qa : qb).empty()) b.edge(0, wp("#", x), chain(x, 1));
    }
}

EpistemicState finish(const ModelBuilder &b) {
    auto s = b.build("w_root");
    return EpistemicState{closure(s.model, s4()), s.designated};
}

} // namespace

EpistemicState s4_state(const std::string &qa, const std::string &qb, Flavor f) {
    if (f != Flavor::Plain && f != Flavor::Loop && f != Flavor::MinusHash)
        throw IllegalFlavor(std::string(to_string(f)) + " is not an S4_1 flavor");
    ModelBuilder b(1);
    b.world("w_root", {"root"});
    if (f == Flavor::Loop) b.world("w_stg1", {"stg1"});
    b.world("w_a", {"a"}).world("w_b", {"b"});
    add_plain(b, qa, qb, f == Flavor::MinusHash);
    if (f == Flavor::Loop) add_loop(b, qa, qb);
    return finish(b);
}

EpistemicState s4_initial() {
    ModelBuilder b(1);
    for (const char *p : {"root", "empty", "stg1", "a", "b"}) b.world(std::string("w_") + p, {p});
    b.edge(0, "w_root", "w_empty");
    add_plain(b, "", "", false);
    add_loop(b, "", "");
    return finish(b);
}

Formula s4_shorthand(const std::string &name) {
    if (name == "symb") return symb();
    if (name == "tail") return tail();
    if (name == "failed") return failed();
    if (name == "loop_a") return loop("a");
    if (name == "loop_b") return loop("b");
    for (const char *d : {"0", "1", "#", "a", "b"})
        if (name == std::string("nxt(") + d + ")") return nxt(d);
    throw UnknownShorthand("S4_1 has no shorthand '" + name + "'");
}

EventModel s4_add_block(const PcpInstance &inst, std::size_t i) {
    const auto &[top, bot] = inst.blocks.at(i - 1);
    ActionBuilder b(1);
    b.event("e_s", P("root") & Diamond(0, P("stg1"))).event("e_st", P("stg1"));
    b.edge(0, "e_s", "e_st");
    for (const char *xs : kSides) {
        const std::string x = xs;
        const std::string &w = x == "a" ? top : bot;
        const std::string ex = "e_" + x, e01 = sub("e", "01," + x);
        auto ej = [&](std::size_t j, const std::string &suffix = "") {
            return sub("e", x + "," + std::to_string(j) + suffix);
        };
        b.event(ex, P(x) & !loop(x)).event(e01, loop(x) | P("lp"));
        b.edge(0, "e_s", ex).edge(0, "e_s", e01);
        for (std::size_t j = 1; j <= w.size(); ++j) {
            b.event(ej(j), P(std::string(1, w[j - 1])) & loop(x)).event(ej(j, ",#"), P("#") & loop(x));
            b.edge(0, ej(j), ej(j, ",#")).edge(0, ej(j), ex);
            if (j > 1) b.edge(0, ej(j - 1, ",#"), ej(j));
        }
        if (w.empty()) {
            b.edge(0, e01, ex);
        } else {
            b.edge(0, "e_s", ej(1)).edge(0, e01, ej(1)).edge(0, ej(w.size(), ",#"), ex);
        }
    }
    return closure(b.build("e_s"), s4());
}

EventModel s4_next_stage() {
    Formula pre = (P("root") & Know(0, !P("empty")) & Diamond(0, P("stg1"))) | (ab() & Know(0, !P("lp")));
    return closure(ActionBuilder(1).event("e_nx", pre).build("e_nx"), s4());
}

EventModel s4_remove(const std::string &bt) {
    const std::string e = "e^" + bt;
    Formula root = P("root") & Know(0, !P("stg1")) & Diamond(0, P("a") & symb()) &
                   Diamond(0, P("b") & symb());
    return closure(ActionBuilder(1)
                       .event(e, root | (ab() & !tail()))
                       .event(e + "_fail", ab() & ((tail() & !P(bt)) | failed()))
                       .edge(0, e, e + "_fail")
                       .build(e),
                   s4());
}

Formula s4_goal() { return Know(0, !P("empty")) & Know(0, !symb()); }

bool s4_failed(const EpistemicState &s) {
    return failed_path(s.model, s.designated, P("root") & Know(0, !P("stg1")), ab(), symb(), failed());
}

} // namespace epi::detail
