#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "epi/formula.hpp"
#include "epi/kripke.hpp"

namespace epi {

/// Pointed event model (E, Q, pre) with a bound on precondition modal depth.
class EventModel {
public:
    EventModel() = default;
    EventModel(Frame frame, std::vector<Formula> pre, NodeIx designated,
               std::optional<int> depth_bound);

    const Frame &frame() const noexcept { return frame_; }
    std::size_t size() const noexcept { return frame_.size(); }
    std::size_t agents() const noexcept { return frame_.agents(); }
    const std::vector<std::string> &events() const noexcept { return frame_.names(); }
    const std::string &name(NodeIx e) const { return frame_.name(e); }
    const Formula &pre(NodeIx e) const { return pre_[e]; }
    NodeIx designated() const noexcept { return designated_; }
    std::optional<int> depth_bound() const noexcept { return depth_bound_; }
    /// Largest precondition depth.
    int max_depth() const;

private:
    Frame frame_;
    std::vector<Formula> pre_;
    NodeIx designated_ = 0;
    std::optional<int> depth_bound_;
};

/**
 * Validated construction. `depth_bound` = nullopt means unbounded.
 * Throws DanglingEventRef or DepthExceeded.
 */
EventModel make_action(const std::vector<std::string> &events, std::size_t agent_count,
                       const std::vector<NamedRelation> &relations,
                       const std::map<std::string, Formula> &pre, const std::string &designated,
                       std::optional<int> depth_bound = 1);

/// Name-based builder mirroring ModelBuilder.
class ActionBuilder {
public:
    explicit ActionBuilder(std::size_t agents) : agents_(agents), edges_(agents) {}

    ActionBuilder &event(const std::string &name, Formula pre);
    ActionBuilder &edge(AgentId i, const std::string &u, const std::string &v);
    ActionBuilder &link(AgentId i, const std::string &u, const std::string &v);
    ActionBuilder &clique(AgentId i, const std::vector<std::string> &cls);
    EventModel build(const std::string &designated, std::optional<int> depth_bound = 1) const;

private:
    std::size_t agents_;
    std::vector<std::string> events_;
    std::map<std::string, Formula> pre_;
    std::vector<NamedRelation> edges_;
};

/// Action names map to event models; std::map gives name-ordered iteration.
using NamedActionSet = std::map<std::string, EventModel>;
using Plan = std::vector<std::string>;

bool applicable(const EpistemicState &s, const EventModel &a);

/// Product update s x a. Throws NotApplicable.
EpistemicState product_update(const EpistemicState &s, const EventModel &a);

/// Index of the first step whose action does not apply.
struct FailureAt {
    std::size_t index;
};

using PlanOutcome = std::variant<EpistemicState, FailureAt>;

PlanOutcome apply_plan(const EpistemicState &s, const NamedActionSet &actions, const Plan &plan,
                       bool minimize = false);

enum class Separability { Separable, NotSeparable, Unknown };

const char *to_string(Separability s);

/**
 * Whether no two distinct events of the set have jointly satisfiable
 * preconditions. Decided only where a propositional argument settles it.
 */
Separability is_separable(const NamedActionSet &actions);

} // namespace epi
