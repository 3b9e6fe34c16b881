#pragma once

#include <string>

#include "epi/reduction.hpp"

namespace epi::detail {

inline Formula Any(std::initializer_list<Formula> fs) {
    Formula out = False();
    bool first = true;
    for (const auto &f : fs) {
        out = first ? f : Or(out, f);
        first = false;
    }
    return out;
}

inline std::string sub(const std::string &base, const std::string &args) {
    return base + "_{" + args + "}";
}

inline const char *const kSides[] = {"a", "b"};

// Failed-state search shared by the variants: from the designated world, a
// path whose first step satisfies `first`, whose later steps satisfy `mid`,
// and which ends in a world satisfying `last`.
bool failed_path(const KripkeModel &m, NodeIx s0, const Formula &start, const Formula &first,
                 const Formula &mid, const Formula &end);

EpistemicState k1_state(const std::string &qa, const std::string &qb, Flavor f);
EpistemicState k1_initial();
Formula k1_shorthand(const std::string &name);
EventModel k1_add_block(const PcpInstance &inst, std::size_t i);
EventModel k1_next_stage();
EventModel k1_remove(const std::string &bt);
Formula k1_goal();
bool k1_failed(const EpistemicState &s);

EpistemicState ms5_state(const std::string &qa, const std::string &qb, Flavor f);
EpistemicState ms5_initial();
Formula ms5_shorthand(const std::string &name);
EventModel ms5_add_block(const PcpInstance &inst, std::size_t i);
EventModel ms5_next_stage();
EventModel ms5_remove(const std::string &bt);
Formula ms5_goal();
bool ms5_failed(const EpistemicState &s);

EpistemicState ktb_state(const std::string &qa, const std::string &qb, Flavor f);
EpistemicState ktb_initial();
Formula ktb_shorthand(const std::string &name);
EventModel ktb_add_block(const PcpInstance &inst, std::size_t i);
EventModel ktb_next_stage();
EventModel ktb_remove(const std::string &bt);
Formula ktb_goal();
bool ktb_failed(const EpistemicState &s);

EpistemicState s4_state(const std::string &qa, const std::string &qb, Flavor f);
EpistemicState s4_initial();
Formula s4_shorthand(const std::string &name);
EventModel s4_add_block(const PcpInstance &inst, std::size_t i);
EventModel s4_next_stage();
EventModel s4_remove(const std::string &bt);
Formula s4_goal();
bool s4_failed(const EpistemicState &s);

} // namespace epi::detail
