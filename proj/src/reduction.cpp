#include "epi/reduction.hpp"

#include <algorithm>
#include <deque>
#include <functional>

#include "reduction_internal.hpp"

namespace epi {

using namespace detail;

const char *to_string(Variant v) {
    switch (v) {
    case Variant::K1: return "K1";
    case Variant::MultiS5: return "MultiS5";
    case Variant::KTB1: return "KTB1";
    case Variant::S4_1: return "S4_1";
    }
    return "?";
}

Variant parse_variant(const std::string &name) {
    for (auto v : {Variant::K1, Variant::MultiS5, Variant::KTB1, Variant::S4_1})
        if (name == to_string(v)) return v;
    throw FormatError("unknown variant '" + name + "'");
}

const char *to_string(Flavor f) {
    switch (f) {
    case Flavor::Plain: return "plain";
    case Flavor::Loop: return "loop";
    case Flavor::MinusHash: return "minus_hash";
    case Flavor::MinusHash1: return "minus_hash1";
    case Flavor::MinusHash2: return "minus_hash2";
    }
    return "?";
}

Flavor parse_flavor(const std::string &name) {
    for (auto f : {Flavor::Plain, Flavor::Loop, Flavor::MinusHash, Flavor::MinusHash1, Flavor::MinusHash2})
        if (name == to_string(f)) return f;
    throw FormatError("unknown flavor '" + name + "'");
}

std::size_t agent_count(Variant v) { return v == Variant::MultiS5 ? 2 : 1; }

LogicProfile logic_of(Variant v) {
    switch (v) {
    case Variant::K1: return profile("K");
    case Variant::MultiS5: return profile("S5");
    case Variant::KTB1: return profile("KTB");
    case Variant::S4_1: return profile("S4");
    }
    return profile("K");
}

std::vector<std::string> removal_alphabet(Variant v) {
    switch (v) {
    case Variant::K1: return {"0", "1"};
    case Variant::MultiS5: return {"#", "0", "1"};
    case Variant::KTB1: return {"#1", "#2", "0", "1"};
    case Variant::S4_1: return {"#", "0", "1"};
    }
    return {};
}

std::string add_block_name(std::size_t i) { return "ad_" + std::to_string(i); }
std::string remove_name(const std::string &bt) { return "remove_" + bt; }
std::string delete_name(const std::string &p) { return "delete_" + p; }

EpistemicState initial_state(Variant v) {
    switch (v) {
    case Variant::K1: return k1_initial();
    case Variant::MultiS5: return ms5_initial();
    case Variant::KTB1: return ktb_initial();
    case Variant::S4_1: return s4_initial();
    }
    throw FormatError("bad variant");
}

EpistemicState oracle_state(Variant v, const std::string &qa, const std::string &qb, Flavor f) {
    validate(PcpInstance{{{qa, qb}}});
    switch (v) {
    case Variant::K1: return k1_state(qa, qb, f);
    case Variant::MultiS5: return ms5_state(qa, qb, f);
    case Variant::KTB1: return ktb_state(qa, qb, f);
    case Variant::S4_1: return s4_state(qa, qb, f);
    }
    throw FormatError("bad variant");
}

Formula shorthand(Variant v, const std::string &name) {
    switch (v) {
    case Variant::K1: return k1_shorthand(name);
    case Variant::MultiS5: return ms5_shorthand(name);
    case Variant::KTB1: return ktb_shorthand(name);
    case Variant::S4_1: return s4_shorthand(name);
    }
    throw UnknownShorthand(name);
}

EventModel add_block_action(Variant v, const PcpInstance &inst, std::size_t i) {
    if (i < 1 || i > inst.blocks.size()) throw FormatError("block index out of range");
    switch (v) {
    case Variant::K1: return k1_add_block(inst, i);
    case Variant::MultiS5: return ms5_add_block(inst, i);
    case Variant::KTB1: return ktb_add_block(inst, i);
    case Variant::S4_1: return s4_add_block(inst, i);
    }
    throw FormatError("bad variant");
}

EventModel next_stage_action(Variant v) {
    switch (v) {
    case Variant::K1: return k1_next_stage();
    case Variant::MultiS5: return ms5_next_stage();
    case Variant::KTB1: return ktb_next_stage();
    case Variant::S4_1: return s4_next_stage();
    }
    throw FormatError("bad variant");
}

EventModel remove_action(Variant v, const std::string &bt) {
    auto alpha = removal_alphabet(v);
    if (std::find(alpha.begin(), alpha.end(), bt) == alpha.end())
        throw FormatError("no removal for '" + bt + "' in " + to_string(v));
    switch (v) {
    case Variant::K1: return k1_remove(bt);
    case Variant::MultiS5: return ms5_remove(bt);
    case Variant::KTB1: return ktb_remove(bt);
    case Variant::S4_1: return s4_remove(bt);
    }
    throw FormatError("bad variant");
}

Formula goal_formula(Variant v) {
    switch (v) {
    case Variant::K1: return k1_goal();
    case Variant::MultiS5: return ms5_goal();
    case Variant::KTB1: return ktb_goal();
    case Variant::S4_1: return s4_goal();
    }
    throw FormatError("bad variant");
}

PlanningProblem reduce(const PcpInstance &inst, Variant v) {
    validate(inst);
    PlanningProblem p;
    p.initial = initial_state(v);
    for (std::size_t i = 1; i <= inst.blocks.size(); ++i)
        p.actions.emplace(add_block_name(i), add_block_action(v, inst, i));
    p.actions.emplace(kNextStage, next_stage_action(v));
    for (const auto &bt : removal_alphabet(v)) p.actions.emplace(remove_name(bt), remove_action(v, bt));
    p.goal = goal_formula(v);
    p.logic = logic_of(v);
    p.variant = to_string(v);
    p.pcp = inst;
    return p;
}

Plan removal_plan(const std::string &word, Variant v) {
    Plan plan;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        const std::string bit(1, *it);
        switch (v) {
        case Variant::K1: break;
        case Variant::MultiS5:
        case Variant::S4_1: plan.push_back(remove_name("#")); break;
        case Variant::KTB1:
            plan.push_back(remove_name("#2"));
            plan.push_back(remove_name("#1"));
            break;
        }
        plan.push_back(remove_name(bit));
    }
    return plan;
}

Plan match_to_plan(const PcpInstance &inst, const Match &m, Variant v) {
    const std::string word = matched_word(inst, m);
    Plan plan;
    if (v == Variant::S4_1) {
        for (auto it = m.rbegin(); it != m.rend(); ++it) plan.push_back(add_block_name(*it));
    } else {
        for (std::size_t i : m) plan.push_back(add_block_name(i));
    }
    plan.push_back(kNextStage);
    for (auto &step : removal_plan(word, v)) plan.push_back(std::move(step));
    return plan;
}

Match plan_to_match(const Plan &plan, Variant v) {
    Match m;
    for (const auto &a : plan) {
        if (a.rfind("ad_", 0) != 0) break;
        m.push_back(std::stoul(a.substr(3)));
    }
    if (v == Variant::S4_1) std::reverse(m.begin(), m.end());
    return m;
}

std::string extend_word(Variant v, const std::string &q, const std::string &w) {
    return v == Variant::S4_1 ? w + q : q + w;
}

bool failed_state_check(const EpistemicState &s, Variant v) {
    switch (v) {
    case Variant::K1: return k1_failed(s);
    case Variant::MultiS5: return ms5_failed(s);
    case Variant::KTB1: return ktb_failed(s);
    case Variant::S4_1: return s4_failed(s);
    }
    return false;
}

namespace detail {

bool failed_path(const KripkeModel &m, NodeIx s0, const Formula &start, const Formula &first,
                 const Formula &mid, const Formula &end) {
    if (!holds(m, s0, start)) return false;
    std::vector<bool> seen(m.size(), false);
    std::deque<NodeIx> queue;
    auto push_if = [&](NodeIx v, const Formula &cond) {
        if (!seen[v] && holds(m, v, cond)) {
            seen[v] = true;
            queue.push_back(v);
        }
    };
    for (AgentId i = 0; i < m.agents(); ++i)
        for (NodeIx s1 : m.succ(i, s0)) push_if(s1, first);
    // later steps must satisfy `mid`; a world already queued as a first step
    // is a valid continuation only if it also satisfies `mid`
    std::vector<bool> as_mid(m.size(), false);
    while (!queue.empty()) {
        NodeIx u = queue.front();
        queue.pop_front();
        if (holds(m, u, end)) return true;
        for (AgentId i = 0; i < m.agents(); ++i)
            for (NodeIx v : m.succ(i, u))
                if (!as_mid[v] && holds(m, v, mid)) {
                    as_mid[v] = true;
                    queue.push_back(v);
                }
    }
    return false;
}

} // namespace detail

PlanningProblem sat_to_ep(const Formula &phi) {
    auto vars = props_of(phi);
    ModelBuilder b(1);
    b.world("*");
    for (const auto &p : vars) b.world(p, {p});
    std::vector<std::string> all{"*"};
    all.insert(all.end(), vars.begin(), vars.end());
    b.clique(0, all);
    PlanningProblem prob;
    prob.initial = b.build("*");
    for (const auto &p : vars)
        prob.actions.emplace(delete_name(p),
                             ActionBuilder(1).event("e", Not(P(p))).edge(0, "e", "e").build("e"));
    std::function<Formula(const Formula &)> lift = [&](const Formula &f) -> Formula {
        switch (f.op()) {
        case Op::False: return f;
        case Op::Prop: return Diamond(0, f);
        case Op::Not: return Not(lift(f.arg()));
        case Op::And: return And(lift(f.lhs()), lift(f.rhs()));
        case Op::Know: throw FormatError("sat_to_ep expects a propositional formula");
        }
        return f;
    };
    prob.goal = lift(phi);
    prob.logic = profile("S5");
    return prob;
}

} // namespace epi
