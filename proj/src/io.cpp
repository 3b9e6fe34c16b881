#include "epi/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "epi/frames.hpp"

namespace epi {

namespace {

template <class F> auto guarded(const char *what, F &&f) -> decltype(f()) {
    try {
        return f();
    } catch (const Json::exception &e) {
        throw FormatError(std::string(what) + ": " + e.what());
    }
}

Json relations_json(const Frame &f) {
    Json rel = Json::array();
    for (AgentId i = 0; i < f.agents(); ++i) {
        std::vector<std::pair<std::string, std::string>> pairs;
        for (auto [u, v] : f.edges(i)) pairs.emplace_back(f.name(u), f.name(v));
        std::sort(pairs.begin(), pairs.end());
        Json a = Json::array();
        for (const auto &[u, v] : pairs) a.push_back({u, v});
        rel.push_back(std::move(a));
    }
    return rel;
}

std::vector<NamedRelation> relations_from(const Json &j, std::size_t agents) {
    if (!j.is_array() || j.size() != agents)
        throw FormatError("relations must hold one edge list per agent");
    std::vector<NamedRelation> rel(agents);
    for (std::size_t i = 0; i < agents; ++i)
        for (const auto &e : j[i]) {
            if (!e.is_array() || e.size() != 2) throw FormatError("edges are [source, target] pairs");
            rel[i].emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
        }
    return rel;
}

std::vector<std::string> sorted(std::vector<std::string> v) {
    std::sort(v.begin(), v.end());
    return v;
}

} // namespace

Json to_json(const KripkeModel &m) {
    Json val = Json::object();
    for (NodeIx w = 0; w < m.size(); ++w) val[m.name(w)] = propset_names(m.val(w));
    return {{"agents", m.agents()},
            {"worlds", sorted(m.worlds())},
            {"relations", relations_json(m.frame())},
            {"valuation", std::move(val)}};
}

KripkeModel model_from_json(const Json &j) {
    return guarded("model", [&] {
        const std::size_t agents = j.at("agents").get<std::size_t>();
        auto worlds = j.at("worlds").get<std::vector<std::string>>();
        std::map<std::string, std::vector<std::string>> val;
        if (j.contains("valuation")) val = j["valuation"].get<std::map<std::string, std::vector<std::string>>>();
        return make_model(worlds, agents, relations_from(j.at("relations"), agents), val);
    });
}

Json to_json(const EpistemicState &s) {
    Json j = to_json(s.model);
    j["designated"] = s.designated_name();
    return j;
}

EpistemicState state_from_json(const Json &j) {
    auto m = model_from_json(j);
    return make_state(std::move(m), guarded("state", [&] { return j.at("designated").get<std::string>(); }));
}

Json to_json(const Formula &f) {
    switch (f.op()) {
    case Op::False: return {{"op", "false"}};
    case Op::Prop: return {{"op", "prop"}, {"name", f.prop().name()}};
    case Op::Not: return {{"op", "not"}, {"arg", to_json(f.arg())}};
    case Op::And: return {{"op", "and"}, {"lhs", to_json(f.lhs())}, {"rhs", to_json(f.rhs())}};
    case Op::Know: return {{"op", "know"}, {"agent", f.agent()}, {"arg", to_json(f.arg())}};
    }
    return nullptr;
}

Formula formula_from_json(const Json &j) {
    if (j.is_string()) return parse(j.get<std::string>());
    return guarded("formula", [&]() -> Formula {
        const auto op = j.at("op").get<std::string>();
        auto sub = [&](const char *k) { return formula_from_json(j.at(k)); };
        if (op == "false") return False();
        if (op == "true") return Top();
        if (op == "prop") return P(j.at("name").get<std::string>());
        if (op == "not") return Not(sub("arg"));
        if (op == "and") return And(sub("lhs"), sub("rhs"));
        if (op == "or") return Or(sub("lhs"), sub("rhs"));
        if (op == "implies") return Implies(sub("lhs"), sub("rhs"));
        if (op == "know") return Know(j.at("agent").get<AgentId>(), sub("arg"));
        if (op == "diamond") return Diamond(j.at("agent").get<AgentId>(), sub("arg"));
        throw FormatError("formula: unknown op '" + op + "'");
    });
}

Json to_json(const EventModel &a) {
    Json pre = Json::object();
    for (NodeIx e = 0; e < a.size(); ++e) pre[a.name(e)] = to_json(a.pre(e));
    Json bound = a.depth_bound() ? Json(*a.depth_bound()) : Json(nullptr);
    return {{"agents", a.agents()},
            {"events", sorted(a.events())},
            {"relations", relations_json(a.frame())},
            {"pre", std::move(pre)},
            {"designated", a.name(a.designated())},
            {"depth_bound", std::move(bound)}};
}

EventModel action_from_json(const Json &j) {
    return guarded("action", [&] {
        const std::size_t agents = j.at("agents").get<std::size_t>();
        auto events = j.at("events").get<std::vector<std::string>>();
        std::map<std::string, Formula> pre;
        for (const auto &[e, f] : j.at("pre").items()) pre.emplace(e, formula_from_json(f));
        std::optional<int> bound = 1;
        if (j.contains("depth_bound"))
            bound = j["depth_bound"].is_null() ? std::nullopt : std::optional<int>(j["depth_bound"].get<int>());
        return make_action(events, agents, relations_from(j.at("relations"), agents), pre,
                           j.at("designated").get<std::string>(), bound);
    });
}

Json to_json(const PcpInstance &inst) {
    Json blocks = Json::array();
    for (const auto &[a, b] : inst.blocks) blocks.push_back({a, b});
    return {{"blocks", std::move(blocks)}};
}

PcpInstance pcp_from_json(const Json &j) {
    PcpInstance inst = guarded("pcp", [&] {
        PcpInstance out;
        for (const auto &b : j.at("blocks")) {
            if (!b.is_array() || b.size() != 2) throw FormatError("pcp: blocks are [top, bottom] pairs");
            out.blocks.emplace_back(b[0].get<std::string>(), b[1].get<std::string>());
        }
        return out;
    });
    validate(inst);
    return inst;
}

Json to_json(const LogicProfile &l) {
    if (!l.name.empty()) return l.name;
    Json a = Json::array();
    for (auto c : l.conds) a.push_back(to_string(c));
    return a;
}

LogicProfile logic_from_json(const Json &j) {
    if (j.is_string()) return profile(j.get<std::string>());
    if (!j.is_array()) throw FormatError("logic must be a profile name or a list of conditions");
    Conditions conds;
    for (const auto &c : j) {
        auto parsed = c.is_string() ? parse_condition(c.get<std::string>()) : std::nullopt;
        if (!parsed) throw FormatError("logic: unknown frame condition " + c.dump());
        conds.insert(*parsed);
    }
    return profile(conds);
}

Json to_json(const PlanningProblem &p) {
    Json actions = Json::object();
    for (const auto &[name, a] : p.actions) actions[name] = to_json(a);
    Json j = {{"initial", to_json(p.initial)},
              {"actions", std::move(actions)},
              {"goal", to_json(p.goal)},
              {"logic", to_json(p.logic)}};
    Json meta = Json::object();
    if (p.variant) meta["variant"] = *p.variant;
    if (p.pcp) meta["pcp"] = to_json(*p.pcp);
    if (!meta.empty()) j["meta"] = std::move(meta);
    return j;
}

PlanningProblem problem_from_json(const Json &j) {
    PlanningProblem p;
    guarded("problem", [&] {
        p.initial = state_from_json(j.at("initial"));
        for (const auto &[name, a] : j.at("actions").items()) p.actions.emplace(name, action_from_json(a));
        p.goal = formula_from_json(j.at("goal"));
        p.logic = j.contains("logic") ? logic_from_json(j["logic"]) : profile("K");
        if (j.contains("meta")) {
            const auto &meta = j["meta"];
            if (meta.contains("variant")) p.variant = meta["variant"].get<std::string>();
            if (meta.contains("pcp")) p.pcp = pcp_from_json(meta["pcp"]);
        }
        return 0;
    });
    return p;
}

std::string dump(const Json &j) { return j.dump(2) + "\n"; }

Json parse_json(const std::string &text) {
    return guarded("json", [&] { return Json::parse(text); });
}

Json read_json_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_json(ss.str());
}

} // namespace epi
