#pragma once

#include <string>
#include <vector>

#include "epi/action.hpp"
#include "epi/formula.hpp"
#include "epi/pcp.hpp"
#include "epi/problem.hpp"

namespace epi {

enum class Variant { K1, MultiS5, KTB1, S4_1 };

/// State-family flavors. `Loop` is "{0,1}" for K1 and "{0,1,#}" elsewhere.
enum class Flavor { Plain, Loop, MinusHash, MinusHash1, MinusHash2 };

const char *to_string(Variant v);
Variant parse_variant(const std::string &name);
const char *to_string(Flavor f);
Flavor parse_flavor(const std::string &name);

/// Agent count and logic of each variant.
std::size_t agent_count(Variant v);
LogicProfile logic_of(Variant v);

/// Symbols the removal actions range over, in action-name order.
std::vector<std::string> removal_alphabet(Variant v);

std::string add_block_name(std::size_t i);  // "ad_<i>", 1-based
inline const std::string kNextStage = "next_stage";
std::string remove_name(const std::string &bt);  // "remove_<bt>"

/// The initial state s_I of the variant.
EpistemicState initial_state(Variant v);

/// Literal member of a named state family; throws IllegalFlavor.
EpistemicState oracle_state(Variant v, const std::string &qa, const std::string &qb, Flavor f);

/**
 * Variant shorthand formula. Names: symb, tail, last, failed, loop_a,
 * loop_b, nxt(d), ag1, ag2, tail(1), tail(2), okstate. Throws UnknownShorthand.
 */
Formula shorthand(Variant v, const std::string &name);

EventModel add_block_action(Variant v, const PcpInstance &inst, std::size_t i);
EventModel next_stage_action(Variant v);
EventModel remove_action(Variant v, const std::string &bt);
Formula goal_formula(Variant v);

PlanningProblem reduce(const PcpInstance &inst, Variant v);

/// ad_{i1}..ad_{ik} (reversed for S4_1), next_stage, then the removals from
/// the end of the word.
Plan match_to_plan(const PcpInstance &inst, const Match &m, Variant v);

/// Removal actions erasing `word` from its end.
Plan removal_plan(const std::string &word, Variant v);

/// Whether a witness path for a failed state starts at the designated world.
bool failed_state_check(const EpistemicState &s, Variant v);

/// Recovers the block indices from the ad_ prefix of a plan.
Match plan_to_match(const Plan &plan, Variant v = Variant::K1);

/// Encoded word after adding a block with word `w` to an encoding of `q`.
/// S4_1 writes new blocks in front.
std::string extend_word(Variant v, const std::string &q, const std::string &w);

/**
 * SAT to single-agent S5 plan existence: worlds {0} and P, total relation,
 * one deleting action per variable, goal phi with p replaced by <K>p.
 */
PlanningProblem sat_to_ep(const Formula &phi);
std::string delete_name(const std::string &p);  // "delete_<p>"

} // namespace epi
