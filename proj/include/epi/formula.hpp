#pragma once

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>

#include "epi/kripke.hpp"

namespace epi {

enum class Op { False, Prop, Not, And, Know };

/**
 * Immutable modal formula over the primitives False, Prop, Not, And, Know.
 * Derived connectives (Top, Or, Implies, Diamond) desugar on construction.
 */
class Formula {
public:
    Formula();  // false

    Op op() const noexcept { return node_->op; }
    Prop prop() const { return *node_->prop; }
    AgentId agent() const noexcept { return node_->agent; }
    const Formula &arg() const { return *node_->lhs; }
    const Formula &lhs() const { return *node_->lhs; }
    const Formula &rhs() const { return *node_->rhs; }
    int depth() const noexcept { return node_->depth; }
    /// Largest agent index mentioned plus one.
    std::size_t agent_bound() const noexcept { return node_->agent_bound; }

    friend bool operator==(const Formula &a, const Formula &b);
    friend bool operator!=(const Formula &a, const Formula &b) { return !(a == b); }

    static Formula make_false();
    static Formula make_prop(Prop p);
    static Formula make_not(Formula f);
    static Formula make_and(Formula a, Formula b);
    static Formula make_know(AgentId i, Formula f);

private:
    struct Node {
        Op op = Op::False;
        std::optional<Prop> prop;
        AgentId agent = 0;
        std::shared_ptr<const Formula> lhs, rhs;
        int depth = 0;
        std::size_t agent_bound = 0;
    };
    explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

// Builders.
Formula False();
Formula Top();
Formula P(std::string_view name);
Formula Not(Formula f);
Formula And(Formula a, Formula b);
Formula Or(Formula a, Formula b);
Formula Implies(Formula a, Formula b);
Formula Know(AgentId i, Formula f);
Formula Diamond(AgentId i, Formula f);

inline Formula operator!(Formula f) { return Not(std::move(f)); }
inline Formula operator&(Formula a, Formula b) { return And(std::move(a), std::move(b)); }
inline Formula operator|(Formula a, Formula b) { return Or(std::move(a), std::move(b)); }

int modal_depth(const Formula &f);
std::set<std::string> props_of(const Formula &f);

bool evaluate(const EpistemicState &s, const Formula &f);
bool evaluate_at(const EpistemicState &s, const std::string &w, const Formula &f);
/// Index-based evaluation; no agent-bound check.
bool holds(const KripkeModel &m, NodeIx w, const Formula &f);

/**
 * Text syntax:
 *   false | true | ident | !f | f & g | f | g | f -> g | K{i} f | <K{i}> f | K f | (f)
 * with precedence ! > & > | > -> (the last is right-associative).
 */
Formula parse(std::string_view text);
/// Re-sugars Or, Diamond and Top so that parse(print(f)) == f.
std::string print(const Formula &f);

} // namespace epi
