#pragma once

#include <optional>
#include <string>

#include "epi/action.hpp"
#include "epi/formula.hpp"
#include "epi/frames.hpp"
#include "epi/kripke.hpp"
#include "epi/pcp.hpp"

namespace epi {

/// Initial state, named actions, goal and the frame class they live in.
struct PlanningProblem {
    EpistemicState initial;
    NamedActionSet actions;
    Formula goal;
    LogicProfile logic;
    std::optional<std::string> variant;  // set by the PCP compiler
    std::optional<PcpInstance> pcp;
};

} // namespace epi
