#pragma once

// Random generators and independent oracles shared by the unit and
// acceptance tests.

#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "epi/action.hpp"
#include "epi/formula.hpp"
#include "epi/kripke.hpp"
#include "epi/problem.hpp"

namespace epitest {

using Rng = std::mt19937_64;

inline std::size_t pick(Rng &rng, std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

inline bool coin(Rng &rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

inline const std::vector<std::string> &small_props() {
    static const std::vector<std::string> p{"p", "q"};
    return p;
}

inline epi::EpistemicState random_state(Rng &rng, std::size_t max_worlds, std::size_t agents,
                                        double density = 0.3,
                                        const std::vector<std::string> &props = small_props()) {
    std::size_t n = 1 + pick(rng, max_worlds);
    epi::ModelBuilder b(agents);
    for (std::size_t w = 0; w < n; ++w) {
        std::vector<std::string> val;
        for (const auto &p : props)
            if (coin(rng)) val.push_back(p);
        b.world("w" + std::to_string(w), val);
    }
    for (std::size_t a = 0; a < agents; ++a)
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = 0; v < n; ++v)
                if (coin(rng, density)) b.edge(a, "w" + std::to_string(u), "w" + std::to_string(v));
    return b.build("w" + std::to_string(pick(rng, n)));
}

inline epi::Formula random_formula(Rng &rng, int depth, std::size_t agents,
                                   const std::vector<std::string> &props = small_props(),
                                   int size = 4) {
    if (size <= 0 || coin(rng, 0.25)) {
        if (coin(rng, 0.1)) return epi::False();
        return epi::P(props[pick(rng, props.size())]);
    }
    switch (pick(rng, depth > 0 ? 5 : 3)) {
    case 0: return epi::Not(random_formula(rng, depth, agents, props, size - 1));
    case 1:
        return epi::And(random_formula(rng, depth, agents, props, size - 1),
                        random_formula(rng, depth, agents, props, size - 1));
    case 2:
        return epi::Or(random_formula(rng, depth, agents, props, size - 1),
                       random_formula(rng, depth, agents, props, size - 1));
    case 3: return epi::Know(pick(rng, agents), random_formula(rng, depth - 1, agents, props, size - 1));
    default:
        return epi::Diamond(pick(rng, agents), random_formula(rng, depth - 1, agents, props, size - 1));
    }
}

inline epi::EventModel random_action(Rng &rng, std::size_t max_events, std::size_t agents,
                                     int depth = 1, double density = 0.4) {
    std::size_t n = 1 + pick(rng, max_events);
    epi::ActionBuilder b(agents);
    for (std::size_t e = 0; e < n; ++e)
        b.event("e" + std::to_string(e), coin(rng, 0.2) ? epi::Top() : random_formula(rng, depth, agents));
    for (std::size_t a = 0; a < agents; ++a)
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = 0; v < n; ++v)
                if (coin(rng, density)) b.edge(a, "e" + std::to_string(u), "e" + std::to_string(v));
    return b.build("e" + std::to_string(pick(rng, n)), depth);
}

/**
 * Independent bisimilarity oracle: greatest fixpoint of the pairwise
 * relation, removing pairs that violate the back-and-forth clauses.
 */
inline bool naive_bisimilar(const epi::EpistemicState &s, const epi::EpistemicState &t) {
    const auto &a = s.model;
    const auto &b = t.model;
    if (a.agents() != b.agents()) return false;
    std::vector<std::vector<bool>> z(a.size(), std::vector<bool>(b.size()));
    for (epi::NodeIx u = 0; u < a.size(); ++u)
        for (epi::NodeIx v = 0; v < b.size(); ++v) {
            auto x = epi::propset_names(a.val(u));
            auto y = epi::propset_names(b.val(v));
            z[u][v] = x == y;
        }
    bool changed = true;
    while (changed) {
        changed = false;
        for (epi::NodeIx u = 0; u < a.size(); ++u)
            for (epi::NodeIx v = 0; v < b.size(); ++v) {
                if (!z[u][v]) continue;
                bool ok = true;
                for (epi::AgentId i = 0; ok && i < a.agents(); ++i) {
                    for (auto u2 : a.succ(i, u)) {
                        bool found = false;
                        for (auto v2 : b.succ(i, v)) found = found || z[u2][v2];
                        ok = ok && found;
                    }
                    for (auto v2 : b.succ(i, v)) {
                        bool found = false;
                        for (auto u2 : a.succ(i, u)) found = found || z[u2][v2];
                        ok = ok && found;
                    }
                }
                if (!ok) {
                    z[u][v] = false;
                    changed = true;
                }
            }
    }
    return z[s.designated][t.designated];
}

/// Truth-table satisfiability of a propositional formula.
inline bool tt_satisfiable(const epi::Formula &phi) {
    auto props = epi::props_of(phi);
    std::vector<std::string> vars(props.begin(), props.end());
    std::function<bool(const epi::Formula &, const std::set<std::string> &)> ev =
        [&](const epi::Formula &f, const std::set<std::string> &on) -> bool {
        switch (f.op()) {
        case epi::Op::False: return false;
        case epi::Op::Prop: return on.count(f.prop().name()) != 0;
        case epi::Op::Not: return !ev(f.arg(), on);
        case epi::Op::And: return ev(f.lhs(), on) && ev(f.rhs(), on);
        case epi::Op::Know: break;
        }
        throw std::logic_error("not propositional");
    };
    for (std::size_t mask = 0; mask < (std::size_t{1} << vars.size()); ++mask) {
        std::set<std::string> on;
        for (std::size_t k = 0; k < vars.size(); ++k)
            if (mask >> k & 1) on.insert(vars[k]);
        if (ev(phi, on)) return true;
    }
    return false;
}

/**
 * Plan oracle without state deduplication: enumerates every action sequence
 * in (length, name) order and returns the first that reaches the goal.
 */
inline std::optional<epi::Plan> naive_shortest_plan(const epi::PlanningProblem &p, std::size_t max_len) {
    std::vector<std::pair<epi::Plan, epi::EpistemicState>> level{{{}, p.initial}};
    if (epi::evaluate(p.initial, p.goal)) return epi::Plan{};
    for (std::size_t len = 1; len <= max_len; ++len) {
        std::vector<std::pair<epi::Plan, epi::EpistemicState>> next;
        for (const auto &[plan, s] : level)
            for (const auto &[name, a] : p.actions) {
                if (!epi::applicable(s, a)) continue;
                auto t = epi::product_update(s, a);
                auto ext = plan;
                ext.push_back(name);
                if (epi::evaluate(t, p.goal)) return ext;
                next.emplace_back(std::move(ext), std::move(t));
            }
        level = std::move(next);
    }
    return std::nullopt;
}

/// Random propositional formula over p0..p{vars-1}.
inline epi::Formula random_prop_formula(Rng &rng, std::size_t vars, int size) {
    std::vector<std::string> props;
    for (std::size_t k = 0; k < vars; ++k) props.push_back("p" + std::to_string(k));
    return random_formula(rng, 0, 1, props, size);
}

} // namespace epitest
