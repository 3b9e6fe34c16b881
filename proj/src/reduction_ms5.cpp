// Two agents, equivalence relations. Agent 0 and 1 play the roles of 1 and 2.

#include <deque>
#include <set>

#include "epi/frames.hpp"
#include "reduction_internal.hpp"

namespace epi::detail {

namespace {

constexpr AgentId A1 = 0;
constexpr AgentId A2 = 1;

const Conditions &s5() {
    static const Conditions c = profile("S5").conds;
    return c;
}

Formula ab() { return P("a") | P("b"); }
Formula ag1() { return Any({P("root"), P("0"), P("1")}); }
Formula ag2() { return ab() & !Any({P("0"), P("1"), P("ntF"), P("end")}); }
Formula ag(AgentId i) { return i == A1 ? ag1() : ag2(); }
Formula symb() { return Any({P("0"), P("1"), P("#")}); }
Formula last() { return ag2() & Diamond(A2, P("end")); }
Formula tail(AgentId i) { return ag(i) & Know(i, !ag(1 - i)); }
Formula okstate() {
    return ((P("0") | P("1")) & Diamond(A1, P("ntF"))) |
           (ab() & !P("0") & !P("1") & Diamond(A2, P("ntF")));
}

std::string wp(const std::string &p, const std::string &x) { return "w_" + p + "(" + x + ")"; }
std::string chain(const std::string &x, std::size_t j) { return sub("w", x + "," + std::to_string(j)); }
std::string chain_h(const std::string &x, std::size_t j) { return sub("w", x + "," + std::to_string(j) + ",#"); }
std::string ntf(const std::string &x, std::size_t j) { return "w_ntF(" + x + "," + std::to_string(j) + ")"; }
std::string ntf_h(const std::string &x, std::size_t j) { return "w_ntF(" + x + "," + std::to_string(j) + ",#)"; }

const std::string &side(const char *x, const std::string &qa, const std::string &qb) {
    return std::string(x) == "a" ? qa : qb;
}

// The tail loop of branch x: Tl_q.
std::vector<std::string> tl(const std::string &x, const std::string &q) {
    return {wp("0", x), wp("1", x), wp("#", x), q.empty() ? wp("ntF", x) : ntf_h(x, q.size()), wp("end", x)};
}

void add_plain(ModelBuilder &b, const std::string &qa, const std::string &qb, bool minus_hash) {
    for (const char *x : kSides) {
        const std::string &q = side(x, qa, qb);
        for (std::size_t j = 1; j <= q.size(); ++j) {
            b.world(chain(x, j), {std::string(1, q[j - 1]), x});
            if (!(minus_hash && j == q.size())) b.world(chain_h(x, j), {"#", x});
            b.world(ntf(x, j), {"ntF", x}).world(ntf_h(x, j), {"ntF", x});
        }
    }
    std::vector<std::string> top{"w_root", "w_a", "w_b"};
    b.clique(A1, top);
    for (const char *x : kSides) {
        const std::string &q = side(x, qa, qb);
        const std::size_t n = q.size();
        auto keep = [&](std::vector<std::string> cls) {
            std::vector<std::string> out;
            for (auto &w : cls)
                if (b.has_world(w)) out.push_back(w);
            return out;
        };
        std::vector<std::string> head{"w_" + std::string(x), wp("ntF", x)};
        if (n > 0) head.push_back(chain(x, 1));
        b.clique(A2, head);
        for (std::size_t j = 1; j <= n; ++j) {
            b.clique(A1, keep({chain(x, j), chain_h(x, j), ntf(x, j)}));
            if (j < n) b.clique(A2, {chain_h(x, j), chain(x, j + 1), ntf_h(x, j)});
        }
        if (n > 0) b.clique(A2, keep({chain_h(x, n), ntf_h(x, n)}));
    }
}

void add_loop(ModelBuilder &b, const std::string &qa, const std::string &qb) {
    for (const char *x : kSides)
        for (const char *p : {"0", "1", "#", "end"}) b.world(wp(p, x), {p, x});
    b.clique(A1, {"w_root", "w_stg1", "w_a", "w_b"});
    for (const char *x : kSides) {
        const std::string &q = side(x, qa, qb);
        auto t = tl(x, q);
        b.clique(A1, t);
        t.push_back(q.empty() ? "w_" + std::string(x) : chain_h(x, q.size()));
        b.clique(A2, t);
    }
}

EpistemicState finish(const ModelBuilder &b) {
    auto s = b.build("w_root");
    return EpistemicState{closure(s.model, s5()), s.designated};
}

std::string ev(const std::string &x, const std::string &what) { return sub("e", x + "," + what); }
std::string ntf_ev(const std::string &x, const std::string &what) { return "e_ntF^{" + x + "," + what + "}"; }

} // namespace

EpistemicState ms5_state(const std::string &qa, const std::string &qb, Flavor f) {
    if (f != Flavor::Plain && f != Flavor::Loop && f != Flavor::MinusHash)
        throw IllegalFlavor(std::string(to_string(f)) + " is not a MultiS5 flavor");
    ModelBuilder b(2);
    b.world("w_root", {"root"});
    if (f == Flavor::Loop) b.world("w_stg1", {"stg1"});
    b.world("w_a", {"a"}).world("w_b", {"b"});
    b.world(wp("ntF", "a"), {"ntF", "a"}).world(wp("ntF", "b"), {"ntF", "b"});
    add_plain(b, qa, qb, f == Flavor::MinusHash);
    if (f == Flavor::Loop) add_loop(b, qa, qb);
    return finish(b);
}

EpistemicState ms5_initial() {
    ModelBuilder b(2);
    for (const char *p : {"root", "empty", "stg1", "a", "b"}) b.world(std::string("w_") + p, {p});
    for (const char *x : kSides)
        for (const char *p : {"0", "1", "#", "ntF", "end"}) b.world(wp(p, x), {p, x});
    b.clique(A1, {"w_root", "w_empty", "w_stg1", "w_a", "w_b"});
    for (const char *x : kSides) {
        std::vector<std::string> t;
        for (const char *p : {"0", "1", "#", "ntF", "end"}) t.push_back(wp(p, x));
        b.clique(A1, t);
        t.push_back("w_" + std::string(x));
        b.clique(A2, t);
    }
    return finish(b);
}

Formula ms5_shorthand(const std::string &name) {
    if (name == "ag1") return ag1();
    if (name == "ag2") return ag2();
    if (name == "symb") return symb();
    if (name == "last") return last();
    if (name == "tail(1)") return tail(A1);
    if (name == "tail(2)") return tail(A2);
    if (name == "okstate") return okstate();
    throw UnknownShorthand("MultiS5 has no shorthand '" + name + "'");
}

EventModel ms5_add_block(const PcpInstance &inst, std::size_t i) {
    const auto &[top, bot] = inst.blocks.at(i - 1);
    const Formula end1 = Diamond(A1, P("end"));
    const Formula noend1 = Know(A1, !P("end"));
    ActionBuilder b(2);
    b.event("e_s", P("root") & Diamond(A1, P("stg1"))).event("e_st", P("stg1"));
    std::vector<std::string> top_class{"e_s", "e_st"};
    for (const char *xs : kSides) {
        const std::string x = xs;
        const std::string &w = x == "a" ? top : bot;
        const Formula px = P(x);
        b.event("e_" + x, px & ag2() & !P("#") & !last())
            .event(ev(x, "lst"), px & P("#") & last() & noend1)
            .event("e_" + x + "^eps", px & ag2() & !P("#") & last() & noend1)
            .event(ntf_ev(x, "1"), px & P("ntF") & noend1)
            .event(ntf_ev(x, "2"), px & P("ntF") & noend1)
            .event(ntf_ev(x, "lst"), px & P("ntF") & end1)
            .event(ev(x, "smb"), px & symb() & !last())
            .event(ev(x, "{}"), px & end1 & (symb() | P("ntF") | P("end")));
        for (std::size_t j = 1; j <= w.size(); ++j) {
            const std::string js = std::to_string(j);
            b.event(ev(x, js), px & P(std::string(1, w[j - 1])) & end1)
                .event(ev(x, js + ",#"), px & P("#") & end1)
                .event("e_ntF(" + x + "," + js + ")", px & P("ntF") & end1);
            if (j < w.size()) b.event("e_ntF(" + x + "," + js + ",#)", px & P("ntF") & end1);
        }
        top_class.push_back("e_" + x);
        top_class.push_back("e_" + x + "^eps");

        b.clique(A1, {ev(x, "smb"), ev(x, "lst"), ntf_ev(x, "1")});
        b.clique(A2, {"e_" + x, ntf_ev(x, "1"), ev(x, "smb")});
        std::vector<std::string> joint{"e_" + x + "^eps", ev(x, "lst"), ntf_ev(x, "2")};
        if (w.empty()) {
            joint.push_back(ev(x, "{}"));
        } else {
            joint.push_back(ntf_ev(x, "lst"));
            joint.push_back(ev(x, "1"));
        }
        b.clique(A2, joint);
        for (std::size_t j = 1; j <= w.size(); ++j) {
            const std::string js = std::to_string(j);
            b.clique(A1, {ev(x, js), ev(x, js + ",#"), "e_ntF(" + x + "," + js + ")"});
            if (j < w.size())
                b.clique(A2, {ev(x, std::to_string(j + 1)), ev(x, js + ",#"), "e_ntF(" + x + "," + js + ",#)"});
        }
        if (!w.empty()) b.clique(A2, {ev(x, std::to_string(w.size()) + ",#"), ev(x, "{}")});
    }
    b.clique(A1, top_class);
    auto a = b.build("e_s");
    return closure(a, s5());
}

EventModel ms5_next_stage() {
    Formula pre = ((Not(P("root")) | (Know(A1, !P("empty")) & Diamond(A1, P("stg1")))) & !P("stg1") &
                   !(Diamond(A1, P("0")) & Diamond(A1, P("1")))) |
                  P("ntF");
    return closure(ActionBuilder(2).event("e_nx", pre).build("e_nx"), s5());
}

EventModel ms5_remove(const std::string &bt) {
    const std::string e = "e^" + bt;
    Formula orphan = P("ntF") & ((Diamond(A1, ag1()) & Diamond(A1, ag2())) | (Diamond(A2, ag1()) & Diamond(A2, ag2())));
    Formula keep = False();
    for (AgentId i : {A1, A2}) keep = keep | (ag(i) & Not(tail(i) & P(bt) & Diamond(i, P("ntF"))));
    Formula pre = (P("root") & Know(A1, !P("stg1"))) | orphan | (Not(P("root")) & keep);
    return closure(ActionBuilder(2).event(e, pre).build(e), s5());
}

Formula ms5_goal() {
    return Know(A1, !P("empty")) & Know(A1, Not(ab()) | (tail(A2) & Diamond(A2, P("ntF"))));
}

// Strictly alternating path root R1 s1 R2 s2 R1 ..., where an ag_j world is
// followed by an ag_(3-j) world, ending in an a/b world that is not okstate.
bool ms5_failed(const EpistemicState &s) {
    const auto &m = s.model;
    if (!holds(m, s.designated, P("root") & Know(A1, !P("stg1")))) return false;
    const Formula end = ab() & !okstate();
    std::vector<bool> is_end(m.size()), is_ag1(m.size()), is_ag2(m.size()), is_x(m.size());
    for (NodeIx w = 0; w < m.size(); ++w) {
        is_end[w] = holds(m, w, end);
        is_ag1[w] = holds(m, w, ag1());
        is_ag2[w] = holds(m, w, ag2());
        is_x[w] = holds(m, w, ab());
    }
    // State: (world, agent used to leave it).
    std::set<std::pair<NodeIx, AgentId>> seen;
    std::deque<std::pair<NodeIx, AgentId>> todo;
    for (NodeIx v : m.succ(A1, s.designated)) {
        if (!is_x[v]) continue;
        if (is_end[v]) return true;
        if (seen.insert({v, A2}).second) todo.push_back({v, A2});
    }
    while (!todo.empty()) {
        auto [u, i] = todo.front();
        todo.pop_front();
        for (NodeIx v : m.succ(i, u)) {
            if (is_ag1[u] && !is_ag2[v]) continue;
            if (is_ag2[u] && !is_ag1[v]) continue;
            if (is_end[v]) return true;
            if (seen.insert({v, 1 - i}).second) todo.push_back({v, 1 - i});
        }
    }
    return false;
}

} // namespace epi::detail
