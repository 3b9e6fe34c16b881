#pragma once

#include <cstddef>
#include <functional>
#include <string>

#include "epi/bisim.hpp"
#include "epi/problem.hpp"

namespace epi {

struct SearchBudget {
    std::size_t max_depth = 16;
    std::size_t max_nodes = 200000;
    bool minimize_each_step = true;
    bool paranoid_bisim_check = false;
    /// Accept actions whose preconditions exceed modal depth 1.
    bool allow_deep_preconditions = false;
};

struct SearchStats {
    std::size_t nodes = 0;       // distinct states generated, the initial one included
    std::size_t dedup_hits = 0;  // children skipped as already seen
    std::size_t depth = 0;       // deepest level expanded
};

enum class Outcome { PlanFound, NoPlanExhausted, BoundReached };

const char *to_string(Outcome o);

struct SearchOutcome {
    Outcome outcome = Outcome::NoPlanExhausted;
    Plan plan;               // PlanFound only
    CanonicalKey final_key;  // PlanFound only
    SearchStats stats;
};

/// Receives one human-readable line per search event.
using Trace = std::function<void(const std::string &)>;

/// Throws InvalidProblem when agents disagree, a precondition is too deep, or
/// the initial model or an action frame violates the problem's logic.
void validate_problem(const PlanningProblem &p, bool allow_deep = false);

/**
 * Breadth-first search over bisimulation classes. Children are generated in
 * action-name order, so the first plan found is the shortest and, among
 * those, the lexicographically least.
 */
SearchOutcome bfs_plan(const PlanningProblem &p, const SearchBudget &budget, const Trace &trace = {});

/// True iff every step applies and the final state satisfies the goal.
/// Throws UnknownActionName.
bool verify_plan(const PlanningProblem &p, const Plan &plan);

/**
 * Decision procedure for a single agent with Euclidean frames. For S5 the
 * quotient only ever loses worlds, so plans longer than its size are never
 * needed. Euclidean logics without reflexivity fall back to an unbounded
 * bfs_plan. Throws NotSingleAgent or NotEuclidean.
 */
SearchOutcome s5_single_agent_plan(const PlanningProblem &p, const Trace &trace = {});

} // namespace epi
