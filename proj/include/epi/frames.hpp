#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "epi/action.hpp"
#include "epi/kripke.hpp"

namespace epi {

enum class FrameCondition { Reflexive, Transitive, Symmetric, Euclidean };

using Conditions = std::set<FrameCondition>;

const char *to_string(FrameCondition c);
std::optional<FrameCondition> parse_condition(const std::string &name);

/// A named set of frame conditions.
struct LogicProfile {
    std::string name;  // preset name, or empty for an explicit set
    Conditions conds;

    friend bool operator==(const LogicProfile &, const LogicProfile &) = default;
};

/// Presets K, KT, KTB, S4, S5. Throws FormatError for other names.
LogicProfile profile(const std::string &name);
LogicProfile profile(const Conditions &conds);

/// Least per-agent superset of the relations satisfying every condition.
Frame closure(const Frame &f, const Conditions &conds);
KripkeModel closure(const KripkeModel &m, const Conditions &conds);
EventModel closure(const EventModel &a, const Conditions &conds);

bool satisfies(const Frame &f, FrameCondition c);
bool satisfies(const Frame &f, const Conditions &conds);
inline bool satisfies(const KripkeModel &m, const Conditions &conds) {
    return satisfies(m.frame(), conds);
}

} // namespace epi
