#include "epi/frames.hpp"

#include <algorithm>

namespace epi {

const char *to_string(FrameCondition c) {
    switch (c) {
    case FrameCondition::Reflexive: return "reflexive";
    case FrameCondition::Transitive: return "transitive";
    case FrameCondition::Symmetric: return "symmetric";
    case FrameCondition::Euclidean: return "euclidean";
    }
    return "?";
}

std::optional<FrameCondition> parse_condition(const std::string &name) {
    for (auto c : {FrameCondition::Reflexive, FrameCondition::Transitive, FrameCondition::Symmetric,
                   FrameCondition::Euclidean})
        if (name == to_string(c)) return c;
    return std::nullopt;
}

LogicProfile profile(const std::string &name) {
    using enum FrameCondition;
    if (name == "K") return {name, {}};
    if (name == "KT") return {name, {Reflexive}};
    if (name == "KTB") return {name, {Reflexive, Symmetric}};
    if (name == "S4") return {name, {Reflexive, Transitive}};
    if (name == "S5") return {name, {Reflexive, Symmetric, Transitive}};
    throw FormatError("unknown logic profile '" + name + "'");
}

LogicProfile profile(const Conditions &conds) {
    for (const char *n : {"K", "KT", "KTB", "S4", "S5"})
        if (profile(n).conds == conds) return profile(n);
    return {"", conds};
}

namespace {

using Matrix = std::vector<std::vector<bool>>;

Matrix to_matrix(const Frame &f, AgentId i) {
    Matrix r(f.size(), std::vector<bool>(f.size(), false));
    for (NodeIx u = 0; u < f.size(); ++u)
        for (NodeIx v : f.succ(i, u)) r[u][v] = true;
    return r;
}

/// One pass of every requested rule; returns whether anything was added.
bool step(Matrix &r, const Conditions &conds) {
    const std::size_t n = r.size();
    bool changed = false;
    auto add = [&](std::size_t u, std::size_t v) {
        if (!r[u][v]) {
            r[u][v] = true;
            changed = true;
        }
    };
    if (conds.count(FrameCondition::Reflexive))
        for (std::size_t u = 0; u < n; ++u) add(u, u);
    if (conds.count(FrameCondition::Symmetric))
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = 0; v < n; ++v)
                if (r[u][v]) add(v, u);
    if (conds.count(FrameCondition::Transitive))
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t u = 0; u < n; ++u)
                if (r[u][k])
                    for (std::size_t v = 0; v < n; ++v)
                        if (r[k][v]) add(u, v);
    if (conds.count(FrameCondition::Euclidean))
        for (std::size_t w = 0; w < n; ++w)
            for (std::size_t u = 0; u < n; ++u)
                if (r[w][u])
                    for (std::size_t v = 0; v < n; ++v)
                        if (r[w][v]) add(u, v);
    return changed;
}

} // namespace

Frame closure(const Frame &f, const Conditions &conds) {
    std::vector<std::vector<std::pair<NodeIx, NodeIx>>> edges(f.agents());
    for (AgentId i = 0; i < f.agents(); ++i) {
        Matrix r = to_matrix(f, i);
        while (step(r, conds)) {
        }
        for (NodeIx u = 0; u < f.size(); ++u)
            for (NodeIx v = 0; v < f.size(); ++v)
                if (r[u][v]) edges[i].emplace_back(u, v);
    }
    return Frame(f.names(), f.agents(), edges);
}

KripkeModel closure(const KripkeModel &m, const Conditions &conds) {
    return KripkeModel(closure(m.frame(), conds), m.valuation());
}

EventModel closure(const EventModel &a, const Conditions &conds) {
    std::vector<Formula> pre;
    for (NodeIx e = 0; e < a.size(); ++e) pre.push_back(a.pre(e));
    return EventModel(closure(a.frame(), conds), std::move(pre), a.designated(), a.depth_bound());
}

bool satisfies(const Frame &f, FrameCondition c) {
    for (AgentId i = 0; i < f.agents(); ++i)
        for (NodeIx u = 0; u < f.size(); ++u) {
            switch (c) {
            case FrameCondition::Reflexive:
                if (!f.related(i, u, u)) return false;
                break;
            case FrameCondition::Symmetric:
                for (NodeIx v : f.succ(i, u))
                    if (!f.related(i, v, u)) return false;
                break;
            case FrameCondition::Transitive:
                for (NodeIx v : f.succ(i, u))
                    for (NodeIx w : f.succ(i, v))
                        if (!f.related(i, u, w)) return false;
                break;
            case FrameCondition::Euclidean:
                for (NodeIx v : f.succ(i, u))
                    for (NodeIx w : f.succ(i, u))
                        if (!f.related(i, v, w)) return false;
                break;
            }
        }
    return true;
}

bool satisfies(const Frame &f, const Conditions &conds) {
    return std::all_of(conds.begin(), conds.end(), [&](FrameCondition c) { return satisfies(f, c); });
}

} // namespace epi
