#include "epi/kripke.hpp"

#include <algorithm>
#include <deque>
#include <mutex>

namespace epi {

namespace {

struct SymbolTable {
    std::mutex mu;
    std::deque<std::string> names;
    std::unordered_map<std::string, std::uint32_t> ids;
};

SymbolTable &symbols() {
    static SymbolTable table;
    return table;
}

} // namespace

bool Prop::valid_name(std::string_view name) {
    if (name.empty()) return false;
    return std::all_of(name.begin(), name.end(), [](char c) {
        return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
               c == '_' || c == '#';
    });
}

Prop::Prop(std::string_view name) {
    if (!valid_name(name)) throw FormatError("bad proposition name '" + std::string(name) + "'");
    auto &t = symbols();
    std::lock_guard lock(t.mu);
    auto it = t.ids.find(std::string(name));
    if (it != t.ids.end()) {
        id_ = it->second;
        return;
    }
    id_ = static_cast<std::uint32_t>(t.names.size());
    t.names.emplace_back(name);
    t.ids.emplace(std::string(name), id_);
}

const std::string &Prop::name() const {
    auto &t = symbols();
    std::lock_guard lock(t.mu);
    // deque references stay valid across growth
    return t.names[id_];
}

PropSet make_propset(const std::vector<std::string> &names) {
    PropSet s;
    s.reserve(names.size());
    for (const auto &n : names) s.emplace_back(n);
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

bool propset_contains(const PropSet &s, Prop p) {
    return std::binary_search(s.begin(), s.end(), p);
}

std::vector<std::string> propset_names(const PropSet &s) {
    std::vector<std::string> out;
    out.reserve(s.size());
    for (Prop p : s) out.push_back(p.name());
    std::sort(out.begin(), out.end());
    return out;
}

Frame::Frame(std::vector<std::string> names, std::size_t agents,
             const std::vector<std::vector<std::pair<NodeIx, NodeIx>>> &edges)
    : names_(std::move(names)), succ_(agents) {
    for (NodeIx i = 0; i < names_.size(); ++i) {
        if (!index_.emplace(names_[i], i).second) throw DuplicateWorld(names_[i]);
    }
    if (edges.size() != agents)
        throw AgentMismatch("expected " + std::to_string(agents) + " relations, got " +
                            std::to_string(edges.size()));
    for (std::size_t a = 0; a < agents; ++a) {
        auto &adj = succ_[a];
        adj.assign(names_.size(), {});
        for (auto [u, v] : edges[a]) {
            if (u >= names_.size() || v >= names_.size())
                throw DanglingWorldRef("edge index out of range");
            adj[u].push_back(v);
        }
        for (auto &row : adj) {
            std::sort(row.begin(), row.end());
            row.erase(std::unique(row.begin(), row.end()), row.end());
        }
    }
}

NodeIx Frame::index_of(const std::string &name) const {
    auto it = index_.find(name);
    if (it == index_.end()) throw DanglingWorldRef("unknown node '" + name + "'");
    return it->second;
}

bool Frame::related(AgentId i, NodeIx u, NodeIx v) const {
    const auto &row = succ_[i][u];
    return std::binary_search(row.begin(), row.end(), v);
}

std::size_t Frame::edge_count() const {
    std::size_t n = 0;
    for (const auto &adj : succ_)
        for (const auto &row : adj) n += row.size();
    return n;
}

std::vector<std::pair<NodeIx, NodeIx>> Frame::edges(AgentId i) const {
    std::vector<std::pair<NodeIx, NodeIx>> out;
    for (NodeIx u = 0; u < size(); ++u)
        for (NodeIx v : succ_[i][u]) out.emplace_back(u, v);
    return out;
}

KripkeModel::KripkeModel(Frame frame, std::vector<PropSet> valuation)
    : frame_(std::move(frame)), val_(std::move(valuation)) {
    if (val_.size() != frame_.size()) throw DanglingWorldRef("valuation size mismatch");
}

KripkeModel make_model(const std::vector<std::string> &worlds, std::size_t agent_count,
                       const std::vector<NamedRelation> &relations,
                       const std::map<std::string, std::vector<std::string>> &valuation) {
    std::unordered_map<std::string, NodeIx> ix;
    for (NodeIx i = 0; i < worlds.size(); ++i)
        if (!ix.emplace(worlds[i], i).second) throw DuplicateWorld(worlds[i]);
    auto lookup = [&](const std::string &w) {
        auto it = ix.find(w);
        if (it == ix.end()) throw DanglingWorldRef("unknown world '" + w + "'");
        return it->second;
    };
    if (relations.size() != agent_count)
        throw AgentMismatch("expected " + std::to_string(agent_count) + " relations, got " +
                            std::to_string(relations.size()));
    std::vector<std::vector<std::pair<NodeIx, NodeIx>>> edges(agent_count);
    for (std::size_t a = 0; a < agent_count; ++a)
        for (const auto &[u, v] : relations[a]) edges[a].emplace_back(lookup(u), lookup(v));
    std::vector<PropSet> val(worlds.size());
    for (const auto &[w, props] : valuation) val[lookup(w)] = make_propset(props);
    return KripkeModel(Frame(worlds, agent_count, edges), std::move(val));
}

EpistemicState make_state(KripkeModel m, const std::string &designated) {
    if (!m.contains(designated)) throw UnknownWorld(designated);
    NodeIx d = m.index_of(designated);
    return EpistemicState{std::move(m), d};
}

ModelBuilder &ModelBuilder::world(const std::string &name, const std::vector<std::string> &props) {
    if (valuation_.count(name)) throw DuplicateWorld(name);
    worlds_.push_back(name);
    valuation_[name] = props;
    return *this;
}

ModelBuilder &ModelBuilder::edge(AgentId i, const std::string &u, const std::string &v) {
    if (i >= agents_) throw UnknownAgent(std::to_string(i));
    edges_[i].emplace_back(u, v);
    return *this;
}

ModelBuilder &ModelBuilder::link(AgentId i, const std::string &u, const std::string &v) {
    edge(i, u, v);
    return edge(i, v, u);
}

ModelBuilder &ModelBuilder::clique(AgentId i, const std::vector<std::string> &cls) {
    for (const auto &u : cls)
        for (const auto &v : cls) edge(i, u, v);
    return *this;
}

KripkeModel ModelBuilder::build() const { return make_model(worlds_, agents_, edges_, valuation_); }

EpistemicState ModelBuilder::build(const std::string &designated) const {
    return make_state(build(), designated);
}

KripkeModel restrict(const KripkeModel &m, const std::vector<bool> &keep) {
    std::vector<NodeIx> remap(m.size(), static_cast<NodeIx>(-1));
    std::vector<std::string> names;
    std::vector<PropSet> val;
    for (NodeIx w = 0; w < m.size(); ++w) {
        if (!keep[w]) continue;
        remap[w] = static_cast<NodeIx>(names.size());
        names.push_back(m.name(w));
        val.push_back(m.val(w));
    }
    std::vector<std::vector<std::pair<NodeIx, NodeIx>>> edges(m.agents());
    for (AgentId a = 0; a < m.agents(); ++a)
        for (NodeIx u = 0; u < m.size(); ++u) {
            if (!keep[u]) continue;
            for (NodeIx v : m.succ(a, u))
                if (keep[v]) edges[a].emplace_back(remap[u], remap[v]);
        }
    return KripkeModel(Frame(std::move(names), m.agents(), edges), std::move(val));
}

KripkeModel restrict(const KripkeModel &m, const std::set<std::string> &keep) {
    std::vector<bool> mask(m.size(), false);
    for (const auto &w : keep) mask[m.index_of(w)] = true;
    return restrict(m, mask);
}

EpistemicState generated_submodel(const EpistemicState &s) {
    const auto &m = s.model;
    std::vector<bool> seen(m.size(), false);
    std::vector<NodeIx> stack{s.designated};
    seen[s.designated] = true;
    while (!stack.empty()) {
        NodeIx u = stack.back();
        stack.pop_back();
        for (AgentId a = 0; a < m.agents(); ++a)
            for (NodeIx v : m.succ(a, u))
                if (!seen[v]) {
                    seen[v] = true;
                    stack.push_back(v);
                }
    }
    if (std::all_of(seen.begin(), seen.end(), [](bool b) { return b; })) return s;
    KripkeModel r = restrict(m, seen);
    NodeIx d = r.index_of(m.name(s.designated));
    return EpistemicState{std::move(r), d};
}

} // namespace epi
