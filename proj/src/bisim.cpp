#include "epi/bisim.hpp"

#include <algorithm>
#include <map>

namespace epi {

namespace {

void put_u32(std::string &out, std::uint32_t x) {
    for (int s = 24; s >= 0; s -= 8) out.push_back(static_cast<char>((x >> s) & 0xffu));
}

void put_str(std::string &out, const std::string &s) {
    put_u32(out, static_cast<std::uint32_t>(s.size()));
    out += s;
}

std::string valuation_bytes(const PropSet &s) {
    std::string out;
    auto names = propset_names(s);
    put_u32(out, static_cast<std::uint32_t>(names.size()));
    for (const auto &n : names) put_str(out, n);
    return out;
}

/// Dense renumbering of keys in first-occurrence order.
template <class Key>
std::size_t renumber(const std::vector<Key> &keys, std::vector<NodeIx> &out) {
    std::map<Key, NodeIx> ids;
    out.resize(keys.size());
    for (std::size_t w = 0; w < keys.size(); ++w) {
        auto [it, fresh] = ids.emplace(keys[w], static_cast<NodeIx>(ids.size()));
        out[w] = it->second;
    }
    return ids.size();
}

} // namespace

Partition coarsest_bisimulation(const KripkeModel &m) {
    Partition p;
    std::vector<std::vector<Prop>> init(m.valuation().begin(), m.valuation().end());
    p.count = renumber(init, p.block);
    for (;;) {
        std::vector<std::vector<NodeIx>> sig(m.size());
        for (NodeIx w = 0; w < m.size(); ++w) {
            auto &s = sig[w];
            s.push_back(p.block[w]);
            for (AgentId i = 0; i < m.agents(); ++i) {
                std::vector<NodeIx> succ;
                for (NodeIx v : m.succ(i, w)) succ.push_back(p.block[v]);
                std::sort(succ.begin(), succ.end());
                succ.erase(std::unique(succ.begin(), succ.end()), succ.end());
                s.push_back(static_cast<NodeIx>(-1));  // agent separator
                s.insert(s.end(), succ.begin(), succ.end());
            }
        }
        Partition next;
        next.count = renumber(sig, next.block);
        if (next.count == p.count) return next;
        p = std::move(next);
    }
}

EpistemicState quotient(const EpistemicState &s) {
    EpistemicState g = generated_submodel(s);
    const KripkeModel &m = g.model;
    Partition p = coarsest_bisimulation(m);
    std::vector<std::string> names(p.count);
    std::vector<PropSet> val(p.count);
    std::vector<bool> named(p.count, false);
    for (NodeIx w = 0; w < m.size(); ++w) {
        NodeIx b = p.block[w];
        if (named[b]) continue;
        named[b] = true;
        names[b] = m.name(w);
        val[b] = m.val(w);
    }
    std::vector<std::vector<std::pair<NodeIx, NodeIx>>> edges(m.agents());
    for (AgentId i = 0; i < m.agents(); ++i)
        for (NodeIx w = 0; w < m.size(); ++w)
            for (NodeIx v : m.succ(i, w)) edges[i].emplace_back(p.block[w], p.block[v]);
    return EpistemicState{KripkeModel(Frame(std::move(names), m.agents(), edges), std::move(val)),
                          p.block[g.designated]};
}

KripkeModel disjoint_union(const KripkeModel &a, const KripkeModel &b) {
    if (a.agents() != b.agents())
        throw AgentMismatch(std::to_string(a.agents()) + " vs " + std::to_string(b.agents()));
    std::vector<std::string> names;
    std::vector<PropSet> val;
    for (NodeIx w = 0; w < a.size(); ++w) {
        names.push_back("L:" + a.name(w));
        val.push_back(a.val(w));
    }
    for (NodeIx w = 0; w < b.size(); ++w) {
        names.push_back("R:" + b.name(w));
        val.push_back(b.val(w));
    }
    const auto off = static_cast<NodeIx>(a.size());
    std::vector<std::vector<std::pair<NodeIx, NodeIx>>> edges(a.agents());
    for (AgentId i = 0; i < a.agents(); ++i) {
        edges[i] = a.frame().edges(i);
        for (auto [u, v] : b.frame().edges(i)) edges[i].emplace_back(u + off, v + off);
    }
    return KripkeModel(Frame(std::move(names), a.agents(), edges), std::move(val));
}

bool bisimilar(const EpistemicState &a, const EpistemicState &b) {
    KripkeModel u = disjoint_union(a.model, b.model);
    Partition p = coarsest_bisimulation(u);
    return p.block[a.designated] == p.block[static_cast<NodeIx>(a.model.size()) + b.designated];
}

CanonicalKey canonical_key(const EpistemicState &s) {
    EpistemicState q = quotient(s);
    const KripkeModel &m = q.model;
    const std::size_t n = m.size();

    // Round 0 ranks come from the valuation alone; each later round appends
    // per-agent sorted multisets of successor ranks. Ranks are positions in
    // the sorted list of distinct signatures, so they do not depend on
    // world names or order.
    auto rank_of = [&](const std::vector<std::string> &sigs, std::vector<NodeIx> &rank) {
        std::vector<std::string> sorted = sigs;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        rank.resize(sigs.size());
        for (std::size_t w = 0; w < sigs.size(); ++w)
            rank[w] = static_cast<NodeIx>(std::lower_bound(sorted.begin(), sorted.end(), sigs[w]) -
                                          sorted.begin());
        return sorted.size();
    };

    std::vector<std::string> sigs(n);
    for (NodeIx w = 0; w < n; ++w) sigs[w] = valuation_bytes(m.val(w));
    std::vector<NodeIx> rank;
    std::size_t classes = rank_of(sigs, rank);
    for (std::size_t round = 0; round < n; ++round) {
        for (NodeIx w = 0; w < n; ++w) {
            std::string sig;
            put_u32(sig, rank[w]);
            for (AgentId i = 0; i < m.agents(); ++i) {
                std::vector<NodeIx> ms;
                for (NodeIx v : m.succ(i, w)) ms.push_back(rank[v]);
                std::sort(ms.begin(), ms.end());
                put_u32(sig, static_cast<std::uint32_t>(ms.size()));
                for (NodeIx r : ms) put_u32(sig, r);
            }
            sigs[w] = std::move(sig);
        }
        std::vector<NodeIx> next;
        std::size_t c = rank_of(sigs, next);
        rank = std::move(next);
        if (c == classes) break;
        classes = c;
    }

    std::string key;
    put_u32(key, static_cast<std::uint32_t>(m.agents()));
    put_u32(key, static_cast<std::uint32_t>(n));
    put_u32(key, rank[q.designated]);
    std::vector<std::string> by_rank(n);
    for (NodeIx w = 0; w < n; ++w) by_rank[rank[w]] = valuation_bytes(m.val(w));
    for (const auto &v : by_rank) key += v;
    std::vector<std::tuple<std::uint32_t, NodeIx, NodeIx>> edges;
    for (AgentId i = 0; i < m.agents(); ++i)
        for (NodeIx w = 0; w < n; ++w)
            for (NodeIx v : m.succ(i, w))
                edges.emplace_back(static_cast<std::uint32_t>(i), rank[w], rank[v]);
    std::sort(edges.begin(), edges.end());
    put_u32(key, static_cast<std::uint32_t>(edges.size()));
    for (auto [i, u, v] : edges) {
        put_u32(key, i);
        put_u32(key, u);
        put_u32(key, v);
    }
    return key;
}

std::string to_hex(const CanonicalKey &k) {
    static const char *digits = "0123456789abcdef";
    std::string out;
    out.reserve(k.size() * 2);
    for (unsigned char c : k) {
        out.push_back(digits[c >> 4]);
        out.push_back(digits[c & 0xf]);
    }
    return out;
}

} // namespace epi
