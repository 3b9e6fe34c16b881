#include "epi/planner.hpp"

#include <deque>
#include <limits>
#include <unordered_map>

namespace epi {

const char *to_string(Outcome o) {
    switch (o) {
    case Outcome::PlanFound: return "PlanFound";
    case Outcome::NoPlanExhausted: return "NoPlanExhausted";
    case Outcome::BoundReached: return "BoundReached";
    }
    return "?";
}

void validate_problem(const PlanningProblem &p, bool allow_deep) {
    const std::size_t n = p.initial.model.agents();
    if (p.goal.agent_bound() > n)
        throw InvalidProblem("goal mentions agent " + std::to_string(p.goal.agent_bound() - 1));
    if (!satisfies(p.initial.model, p.logic.conds))
        throw InvalidProblem("initial model is not a " + p.logic.name + " model");
    for (const auto &[name, a] : p.actions) {
        if (a.agents() != n) throw InvalidProblem("action " + name + " has the wrong agent count");
        if (!allow_deep && a.max_depth() > 1)
            throw InvalidProblem("action " + name + " has a precondition of modal depth " +
                                 std::to_string(a.max_depth()));
        for (NodeIx e = 0; e < a.size(); ++e)
            if (a.pre(e).agent_bound() > n)
                throw InvalidProblem("action " + name + " mentions an unknown agent");
        if (!satisfies(a.frame(), p.logic.conds))
            throw InvalidProblem("action " + name + " violates the frame conditions");
    }
}

namespace {

struct Node {
    EpistemicState state;
    std::size_t parent;
    std::string action;
    std::size_t depth;
};

Plan path_to(const std::vector<Node> &nodes, std::size_t i) {
    Plan plan;
    for (; i != 0; i = nodes[i].parent) plan.push_back(nodes[i].action);
    return {plan.rbegin(), plan.rend()};
}

} // namespace

SearchOutcome bfs_plan(const PlanningProblem &p, const SearchBudget &budget, const Trace &trace) {
    validate_problem(p, budget.allow_deep_preconditions);
    if (budget.max_depth == 0 || budget.max_nodes == 0) throw InvalidProblem("search bounds must be positive");
    SearchOutcome out;
    auto &st = out.stats;
    auto norm = [&](EpistemicState s) { return budget.minimize_each_step ? quotient(s) : s; };

    std::vector<Node> nodes;
    std::unordered_map<CanonicalKey, std::vector<std::size_t>> seen;
    nodes.push_back({norm(p.initial), 0, "", 0});
    seen[canonical_key(nodes[0].state)].push_back(0);
    st.nodes = 1;
    if (evaluate(nodes[0].state, p.goal)) {
        out.outcome = Outcome::PlanFound;
        out.final_key = canonical_key(nodes[0].state);
        return out;
    }

    // Returns true if the state is new and records it.
    auto fresh = [&](const CanonicalKey &key, const EpistemicState &s) {
        auto it = seen.find(key);
        if (it == seen.end()) return true;
        if (!budget.paranoid_bisim_check) return false;
        for (std::size_t j : it->second)
            if (bisimilar(nodes[j].state, s)) return false;
        if (trace) trace("paranoid check: key collision without bisimilarity");
        return true;
    };

    bool cut = false;
    std::deque<std::size_t> queue{0};
    while (!queue.empty()) {
        const std::size_t i = queue.front();
        queue.pop_front();
        const std::size_t d = nodes[i].depth;
        st.depth = std::max(st.depth, d);
        for (const auto &[name, a] : p.actions) {
            if (!applicable(nodes[i].state, a)) continue;
            EpistemicState child = norm(product_update(nodes[i].state, a));
            CanonicalKey key = canonical_key(child);
            if (!fresh(key, child)) {
                ++st.dedup_hits;
                continue;
            }
            // A new state one step past the depth bound only proves the bound bites.
            if (d >= budget.max_depth || st.nodes >= budget.max_nodes) {
                cut = true;
                continue;
            }
            const bool goal = evaluate(child, p.goal);
            nodes.push_back({std::move(child), i, name, d + 1});
            seen[key].push_back(nodes.size() - 1);
            ++st.nodes;
            if (goal) {
                out.outcome = Outcome::PlanFound;
                out.plan = path_to(nodes, nodes.size() - 1);
                out.final_key = std::move(key);
                st.depth = d + 1;
                if (trace) trace("goal reached at depth " + std::to_string(d + 1));
                return out;
            }
            queue.push_back(nodes.size() - 1);
        }
        if (trace && (queue.empty() || nodes[queue.front()].depth != d))
            trace("depth " + std::to_string(d) + " done: " + std::to_string(st.nodes) + " nodes, " +
                  std::to_string(st.dedup_hits) + " dedup hits");
        if (st.nodes >= budget.max_nodes && cut) break;
    }
    out.outcome = cut ? Outcome::BoundReached : Outcome::NoPlanExhausted;
    return out;
}

bool verify_plan(const PlanningProblem &p, const Plan &plan) {
    auto r = apply_plan(p.initial, p.actions, plan);
    const auto *s = std::get_if<EpistemicState>(&r);
    return s && evaluate(*s, p.goal);
}

SearchOutcome s5_single_agent_plan(const PlanningProblem &p, const Trace &trace) {
    if (p.initial.model.agents() != 1)
        throw NotSingleAgent(std::to_string(p.initial.model.agents()) + " agents");
    const auto &c = p.logic.conds;
    const bool euclidean = c.count(FrameCondition::Euclidean) ||
                           (c.count(FrameCondition::Symmetric) && c.count(FrameCondition::Transitive));
    if (!euclidean)
        throw NotEuclidean("logic " + (p.logic.name.empty() ? std::string("(explicit)") : p.logic.name));
    SearchBudget budget;
    budget.max_nodes = std::numeric_limits<std::size_t>::max();
    if (!c.count(FrameCondition::Reflexive)) {
        if (trace) trace("Euclidean without reflexivity: unbounded breadth-first search");
        budget.max_depth = std::numeric_limits<std::size_t>::max();
        return bfs_plan(p, budget, trace);
    }
    budget.max_depth = quotient(p.initial).model.size();
    auto out = bfs_plan(p, budget, trace);
    if (out.outcome == Outcome::BoundReached) out.outcome = Outcome::NoPlanExhausted;
    return out;
}

} // namespace epi
