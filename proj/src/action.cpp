#include "epi/action.hpp"

#include <algorithm>
#include <functional>

#include "epi/bisim.hpp"

namespace epi {

EventModel::EventModel(Frame frame, std::vector<Formula> pre, NodeIx designated,
                       std::optional<int> depth_bound)
    : frame_(std::move(frame)), pre_(std::move(pre)), designated_(designated),
      depth_bound_(depth_bound) {
    if (pre_.size() != frame_.size()) throw DanglingEventRef("precondition map is not total");
    if (designated_ >= frame_.size()) throw DanglingEventRef("designated event out of range");
    if (depth_bound_)
        for (NodeIx e = 0; e < frame_.size(); ++e)
            if (pre_[e].depth() > *depth_bound_) throw DepthExceeded(frame_.name(e), pre_[e].depth());
}

int EventModel::max_depth() const {
    int d = 0;
    for (const auto &f : pre_) d = std::max(d, f.depth());
    return d;
}

EventModel make_action(const std::vector<std::string> &events, std::size_t agent_count,
                       const std::vector<NamedRelation> &relations,
                       const std::map<std::string, Formula> &pre, const std::string &designated,
                       std::optional<int> depth_bound) {
    std::unordered_map<std::string, NodeIx> ix;
    for (NodeIx i = 0; i < events.size(); ++i)
        if (!ix.emplace(events[i], i).second) throw DuplicateWorld(events[i]);
    auto lookup = [&](const std::string &e) {
        auto it = ix.find(e);
        if (it == ix.end()) throw DanglingEventRef("unknown event '" + e + "'");
        return it->second;
    };
    if (relations.size() != agent_count)
        throw AgentMismatch("expected " + std::to_string(agent_count) + " relations");
    std::vector<std::vector<std::pair<NodeIx, NodeIx>>> edges(agent_count);
    for (std::size_t a = 0; a < agent_count; ++a)
        for (const auto &[u, v] : relations[a]) edges[a].emplace_back(lookup(u), lookup(v));
    std::vector<Formula> pres(events.size());
    std::vector<bool> given(events.size(), false);
    for (const auto &[e, f] : pre) {
        NodeIx i = lookup(e);
        pres[i] = f;
        given[i] = true;
    }
    for (NodeIx i = 0; i < events.size(); ++i)
        if (!given[i]) throw DanglingEventRef("event '" + events[i] + "' has no precondition");
    NodeIx d = lookup(designated);
    for (const auto &f : pres)
        if (f.agent_bound() > agent_count) throw UnknownAgent("precondition agent out of range");
    return EventModel(Frame(events, agent_count, edges), std::move(pres), d, depth_bound);
}

ActionBuilder &ActionBuilder::event(const std::string &name, Formula pre) {
    if (pre_.count(name)) throw DuplicateWorld(name);
    events_.push_back(name);
    pre_.emplace(name, std::move(pre));
    return *this;
}

ActionBuilder &ActionBuilder::edge(AgentId i, const std::string &u, const std::string &v) {
    if (i >= agents_) throw UnknownAgent(std::to_string(i));
    edges_[i].emplace_back(u, v);
    return *this;
}

ActionBuilder &ActionBuilder::link(AgentId i, const std::string &u, const std::string &v) {
    edge(i, u, v);
    return edge(i, v, u);
}

ActionBuilder &ActionBuilder::clique(AgentId i, const std::vector<std::string> &cls) {
    for (const auto &u : cls)
        for (const auto &v : cls) edge(i, u, v);
    return *this;
}

EventModel ActionBuilder::build(const std::string &designated, std::optional<int> depth_bound) const {
    return make_action(events_, agents_, edges_, pre_, designated, depth_bound);
}

bool applicable(const EpistemicState &s, const EventModel &a) {
    if (s.model.agents() != a.agents())
        throw AgentMismatch("state has " + std::to_string(s.model.agents()) + " agents, action " +
                            std::to_string(a.agents()));
    return holds(s.model, s.designated, a.pre(a.designated()));
}

EpistemicState product_update(const EpistemicState &s, const EventModel &a) {
    if (!applicable(s, a)) throw NotApplicable("designated precondition fails");
    const KripkeModel &m = s.model;
    const std::size_t nw = m.size(), ne = a.size();
    std::vector<NodeIx> slot(nw * ne, static_cast<NodeIx>(-1));
    std::vector<std::pair<NodeIx, NodeIx>> pairs;
    std::vector<std::string> names;
    std::vector<PropSet> val;
    for (NodeIx u = 0; u < nw; ++u)
        for (NodeIx f = 0; f < ne; ++f) {
            if (!holds(m, u, a.pre(f))) continue;
            slot[u * ne + f] = static_cast<NodeIx>(pairs.size());
            pairs.emplace_back(u, f);
            names.push_back("(" + m.name(u) + "," + a.name(f) + ")");
            val.push_back(m.val(u));
        }
    std::vector<std::vector<std::pair<NodeIx, NodeIx>>> edges(m.agents());
    for (AgentId i = 0; i < m.agents(); ++i)
        for (NodeIx p = 0; p < pairs.size(); ++p) {
            auto [u, f] = pairs[p];
            for (NodeIx v : m.succ(i, u))
                for (NodeIx g : a.frame().succ(i, f)) {
                    NodeIx q = slot[v * ne + g];
                    if (q != static_cast<NodeIx>(-1)) edges[i].emplace_back(p, q);
                }
        }
    NodeIx d = slot[s.designated * ne + a.designated()];
    return EpistemicState{KripkeModel(Frame(std::move(names), m.agents(), edges), std::move(val)), d};
}

PlanOutcome apply_plan(const EpistemicState &s, const NamedActionSet &actions, const Plan &plan,
                       bool minimize) {
    for (const auto &name : plan)
        if (!actions.count(name)) throw UnknownActionName(name);
    EpistemicState cur = s;
    for (std::size_t k = 0; k < plan.size(); ++k) {
        const EventModel &a = actions.at(plan[k]);
        if (!applicable(cur, a)) return FailureAt{k};
        cur = product_update(cur, a);
        if (minimize) cur = quotient(cur);
    }
    return cur;
}

const char *to_string(Separability s) {
    switch (s) {
    case Separability::Separable: return "separable";
    case Separability::NotSeparable: return "not_separable";
    case Separability::Unknown: return "unknown";
    }
    return "unknown";
}

namespace {

constexpr std::size_t kMaxAtoms = 20;

/// Propositional abstraction: props and outermost Know subformulas become atoms.
struct Abstraction {
    std::vector<Formula> atoms;

    std::size_t atom(const Formula &f) {
        for (std::size_t i = 0; i < atoms.size(); ++i)
            if (atoms[i] == f) return i;
        atoms.push_back(f);
        return atoms.size() - 1;
    }

    void collect(const Formula &f) {
        switch (f.op()) {
        case Op::False: return;
        case Op::Prop:
        case Op::Know: atom(f); return;
        case Op::Not: collect(f.arg()); return;
        case Op::And: collect(f.lhs()); collect(f.rhs()); return;
        }
    }

    bool eval(const Formula &f, std::uint64_t mask) const {
        switch (f.op()) {
        case Op::False: return false;
        case Op::Not: return !eval(f.arg(), mask);
        case Op::And: return eval(f.lhs(), mask) && eval(f.rhs(), mask);
        case Op::Prop:
        case Op::Know: break;
        }
        for (std::size_t i = 0; i < atoms.size(); ++i)
            if (atoms[i] == f) return (mask >> i) & 1u;
        return false;
    }
};

/// Satisfiability of a conjunction of propositional formulas (by truth table).
std::optional<bool> prop_sat(const std::vector<Formula> &conj) {
    Abstraction ab;
    for (const auto &f : conj) ab.collect(f);
    if (ab.atoms.size() > kMaxAtoms) return std::nullopt;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << ab.atoms.size()); ++m)
        if (std::all_of(conj.begin(), conj.end(), [&](const Formula &f) { return ab.eval(f, m); }))
            return true;
    return false;
}

/// Exact satisfiability over arbitrary frames for formulas of modal depth <= 1.
std::optional<bool> depth1_sat(const Formula &f) {
    if (f.depth() > 1) return std::nullopt;
    Abstraction ab;
    ab.collect(f);
    if (ab.atoms.size() > kMaxAtoms) return std::nullopt;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << ab.atoms.size()); ++m) {
        if (!ab.eval(f, m)) continue;
        bool ok = true;
        for (std::size_t i = 0; ok && i < ab.atoms.size(); ++i) {
            const Formula &k = ab.atoms[i];
            if (k.op() != Op::Know || ((m >> i) & 1u)) continue;
            std::vector<Formula> need{Not(k.arg())};
            for (std::size_t j = 0; j < ab.atoms.size(); ++j)
                if (ab.atoms[j].op() == Op::Know && ab.atoms[j].agent() == k.agent() && ((m >> j) & 1u))
                    need.push_back(ab.atoms[j].arg());
            auto r = prop_sat(need);
            if (!r) return std::nullopt;
            ok = *r;
        }
        if (ok) return true;
    }
    return false;
}

} // namespace

Separability is_separable(const NamedActionSet &actions) {
    std::vector<Formula> pres;
    for (const auto &[name, a] : actions)
        for (NodeIx e = 0; e < a.size(); ++e) pres.push_back(a.pre(e));
    bool unknown = false;
    for (std::size_t i = 0; i < pres.size(); ++i)
        for (std::size_t j = i + 1; j < pres.size(); ++j) {
            const Formula &f = pres[i], &g = pres[j];
            auto core = prop_sat({f, g});
            if (core && !*core) continue;
            if (core && f.depth() == 0 && g.depth() == 0) return Separability::NotSeparable;
            if (f == g) {
                auto s = depth1_sat(f);
                if (s && *s) return Separability::NotSeparable;
                if (s && !*s) continue;
            }
            unknown = true;
        }
    return unknown ? Separability::Unknown : Separability::Separable;
}

} // namespace epi
