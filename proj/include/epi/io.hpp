#pragma once

#include <string>

#include "json.hpp"

#include "epi/action.hpp"
#include "epi/formula.hpp"
#include "epi/kripke.hpp"
#include "epi/pcp.hpp"
#include "epi/problem.hpp"

namespace epi {

using Json = nlohmann::json;

// Writers produce the canonical form: sorted worlds, events, edges and
// propositions. Readers throw FormatError on malformed documents.

Json to_json(const KripkeModel &m);
KripkeModel model_from_json(const Json &j);

/// Model fields plus "designated".
Json to_json(const EpistemicState &s);
EpistemicState state_from_json(const Json &j);

/// Tagged tree over false/prop/not/and/know. The reader also accepts
/// true/or/implies/diamond nodes and plain strings in the text grammar.
Json to_json(const Formula &f);
Formula formula_from_json(const Json &j);

Json to_json(const EventModel &a);
EventModel action_from_json(const Json &j);

Json to_json(const PcpInstance &inst);
PcpInstance pcp_from_json(const Json &j);

/// Preset name, or an array of condition names for other sets.
Json to_json(const LogicProfile &l);
LogicProfile logic_from_json(const Json &j);

Json to_json(const PlanningProblem &p);
PlanningProblem problem_from_json(const Json &j);

/// Two-space indentation, sorted keys, trailing newline.
std::string dump(const Json &j);
Json parse_json(const std::string &text);
Json read_json_file(const std::string &path);

} // namespace epi
