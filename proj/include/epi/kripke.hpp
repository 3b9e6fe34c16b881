#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "epi/error.hpp"

namespace epi {

using AgentId = std::size_t;
using NodeIx = std::uint32_t;

/**
 * Interned propositional variable. Two propositions compare equal iff their
 * names are equal; comparison is a single integer compare.
 */
class Prop {
public:
    explicit Prop(std::string_view name);

    const std::string &name() const;
    std::uint32_t id() const noexcept { return id_; }

    friend bool operator==(Prop a, Prop b) noexcept { return a.id_ == b.id_; }
    friend bool operator!=(Prop a, Prop b) noexcept { return a.id_ != b.id_; }
    friend bool operator<(Prop a, Prop b) noexcept { return a.id_ < b.id_; }

    static bool valid_name(std::string_view name);

private:
    std::uint32_t id_;
};

/// Sorted (by interned id), duplicate-free set of propositions.
using PropSet = std::vector<Prop>;

PropSet make_propset(const std::vector<std::string> &names);
bool propset_contains(const PropSet &s, Prop p);
/// Names of the set, sorted lexicographically.
std::vector<std::string> propset_names(const PropSet &s);

/**
 * Named nodes plus one accessibility relation per agent. Shared by Kripke
 * models (nodes are worlds) and event models (nodes are events).
 */
class Frame {
public:
    Frame() = default;
    Frame(std::vector<std::string> names, std::size_t agents,
          const std::vector<std::vector<std::pair<NodeIx, NodeIx>>> &edges);

    std::size_t size() const noexcept { return names_.size(); }
    std::size_t agents() const noexcept { return succ_.size(); }
    const std::vector<std::string> &names() const noexcept { return names_; }
    const std::string &name(NodeIx w) const { return names_.at(w); }
    bool contains(const std::string &name) const { return index_.count(name) != 0; }
    /// Throws DanglingWorldRef when absent.
    NodeIx index_of(const std::string &name) const;

    /// Sorted successor list of w for agent i.
    const std::vector<NodeIx> &succ(AgentId i, NodeIx w) const { return succ_[i][w]; }
    bool related(AgentId i, NodeIx u, NodeIx v) const;
    std::size_t edge_count() const;
    std::vector<std::pair<NodeIx, NodeIx>> edges(AgentId i) const;

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, NodeIx> index_;
    std::vector<std::vector<std::vector<NodeIx>>> succ_;
};

/// A Kripke model (W, R, V). Immutable once built.
class KripkeModel {
public:
    KripkeModel() = default;
    KripkeModel(Frame frame, std::vector<PropSet> valuation);

    const Frame &frame() const noexcept { return frame_; }
    std::size_t size() const noexcept { return frame_.size(); }
    std::size_t agents() const noexcept { return frame_.agents(); }
    const std::vector<std::string> &worlds() const noexcept { return frame_.names(); }
    const std::string &name(NodeIx w) const { return frame_.name(w); }
    NodeIx index_of(const std::string &w) const { return frame_.index_of(w); }
    bool contains(const std::string &w) const { return frame_.contains(w); }
    const std::vector<NodeIx> &succ(AgentId i, NodeIx w) const { return frame_.succ(i, w); }
    bool related(AgentId i, NodeIx u, NodeIx v) const { return frame_.related(i, u, v); }
    const PropSet &val(NodeIx w) const { return val_[w]; }
    const std::vector<PropSet> &valuation() const noexcept { return val_; }

private:
    Frame frame_;
    std::vector<PropSet> val_;
};

/// A pointed Kripke model.
struct EpistemicState {
    KripkeModel model;
    NodeIx designated = 0;

    const std::string &designated_name() const { return model.name(designated); }
};

using NamedRelation = std::vector<std::pair<std::string, std::string>>;

/**
 * Build a validated model. World order is preserved; worlds missing from
 * `valuation` get the empty set.
 */
KripkeModel make_model(const std::vector<std::string> &worlds, std::size_t agent_count,
                       const std::vector<NamedRelation> &relations,
                       const std::map<std::string, std::vector<std::string>> &valuation);

/// Throws UnknownWorld when `designated` is not a world of `m`.
EpistemicState make_state(KripkeModel m, const std::string &designated);

/// Incremental construction by name; used by the reduction builders.
class ModelBuilder {
public:
    explicit ModelBuilder(std::size_t agents) : agents_(agents), edges_(agents) {}

    ModelBuilder &world(const std::string &name, const std::vector<std::string> &props = {});
    ModelBuilder &edge(AgentId i, const std::string &u, const std::string &v);
    /// Adds u->v and v->u.
    ModelBuilder &link(AgentId i, const std::string &u, const std::string &v);
    /// Every pair (including loops) inside `cls` for agent i.
    ModelBuilder &clique(AgentId i, const std::vector<std::string> &cls);
    bool has_world(const std::string &name) const { return valuation_.count(name) != 0; }

    KripkeModel build() const;
    EpistemicState build(const std::string &designated) const;

private:
    std::size_t agents_;
    std::vector<std::string> worlds_;
    std::map<std::string, std::vector<std::string>> valuation_;
    std::vector<NamedRelation> edges_;
};

/// Worlds reachable from the designated world through any agent's relation.
EpistemicState generated_submodel(const EpistemicState &s);

/// Induced submodel on `keep`; the kept worlds retain their relative order.
KripkeModel restrict(const KripkeModel &m, const std::set<std::string> &keep);
KripkeModel restrict(const KripkeModel &m, const std::vector<bool> &keep);

} // namespace epi
