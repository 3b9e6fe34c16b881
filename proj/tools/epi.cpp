// Command-line frontend. Results go to stdout as JSON; --verbose traces to stderr.

#include <cstdlib>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "epi/bisim.hpp"
#include "epi/io.hpp"
#include "epi/lemmas.hpp"
#include "epi/planner.hpp"
#include "epi/reduction.hpp"

using namespace epi;

namespace {

enum Exit { kOk = 0, kFalse = 1, kBound = 2, kInput = 3 };

bool verbose = false;

void trace(const std::string &line) {
    if (verbose) std::cerr << line << "\n";
}

int emit(const Json &j, int code) {
    std::cout << dump(j);
    return code;
}

int outcome_code(Outcome o) {
    switch (o) {
    case Outcome::PlanFound: return kOk;
    case Outcome::NoPlanExhausted: return kFalse;
    case Outcome::BoundReached: return kBound;
    }
    return kInput;
}

std::size_t env_cap(const char *name, std::size_t fallback) {
    const char *v = std::getenv(name);
    if (!v || !*v) return fallback;
    try {
        return std::stoul(v);
    } catch (const std::exception &) {
        throw FormatError(std::string(name) + " is not a number: " + v);
    }
}

Plan plan_arg(const std::string &csv, const std::string &file) {
    if (!file.empty()) return read_json_file(file).get<Plan>();
    Plan plan;
    std::stringstream ss(csv);
    for (std::string step; std::getline(ss, step, ',');)
        if (!step.empty()) plan.push_back(step);
    return plan;
}

Json search_json(const SearchOutcome &r) {
    Json j = {{"outcome", to_string(r.outcome)},
              {"plan", r.plan},
              {"stats", {{"nodes", r.stats.nodes}, {"dedup_hits", r.stats.dedup_hits}, {"depth", r.stats.depth}}}};
    if (r.outcome == Outcome::PlanFound) j["final_key"] = to_hex(r.final_key);
    return j;
}

struct BudgetFlags {
    std::size_t max_depth = 0, max_nodes = 0;
    bool no_minimize = false, paranoid = false, allow_deep = false;

    void add(CLI::App *c) {
        c->add_option("--max-depth", max_depth, "Longest plan considered (default $EPI_MAX_DEPTH or 16)");
        c->add_option("--max-nodes", max_nodes, "Distinct states kept (default $EPI_MAX_NODES or 200000)");
        c->add_flag("--no-minimize", no_minimize, "Keep unminimized states in the frontier");
        c->add_flag("--paranoid", paranoid, "Confirm key hits with a bisimilarity check");
        c->add_flag("--allow-deep", allow_deep, "Accept preconditions of modal depth above 1");
    }
    SearchBudget budget() const {
        SearchBudget b;
        b.max_depth = max_depth ? max_depth : env_cap("EPI_MAX_DEPTH", b.max_depth);
        b.max_nodes = max_nodes ? max_nodes : env_cap("EPI_MAX_NODES", b.max_nodes);
        b.minimize_each_step = !no_minimize;
        b.paranoid_bisim_check = paranoid;
        b.allow_deep_preconditions = allow_deep;
        return b;
    }
};

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Dynamic epistemic logic engine and PCP reduction toolkit"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_flag("-v,--verbose", verbose, "Trace to stderr");

    std::string state, state2, action, formula, formula_file, world, problem, plan_csv, plan_file, pcp;
    std::string variant = "K1", suite = "lemmas";
    bool minimize = false, use_s5 = false;
    std::uint64_t seed = 1;
    std::size_t count = 0, max_len = 0;
    BudgetFlags bf;

    auto *check = app.add_subcommand("check", "Evaluate a formula at a state");
    check->add_option("--state", state, "State JSON")->required();
    auto *fopt = check->add_option("--formula", formula, "Formula text");
    check->add_option("--formula-file", formula_file, "Formula JSON")->excludes(fopt);
    check->add_option("--world", world, "Evaluate at this world instead of the designated one");

    auto *update = app.add_subcommand("update", "Apply one action to a state");
    update->add_option("--state", state, "State JSON")->required();
    update->add_option("--action", action, "Action JSON")->required();
    update->add_flag("--minimize", minimize, "Quotient the result");

    auto *apply = app.add_subcommand("apply", "Apply a plan to a problem's initial state");
    auto *verify = app.add_subcommand("verify", "Check that a plan applies and reaches the goal");
    for (auto *c : {apply, verify}) {
        c->add_option("--problem", problem, "Problem JSON")->required();
        auto *p = c->add_option("--plan", plan_csv, "Comma-separated action names");
        c->add_option("--plan-file", plan_file, "JSON array of action names")->excludes(p);
    }
    apply->add_flag("--minimize", minimize, "Quotient after every step");

    auto *bisim = app.add_subcommand("bisim", "Compare two states up to bisimilarity");
    bisim->add_option("--left", state, "State JSON")->required();
    bisim->add_option("--right", state2, "State JSON")->required();

    auto *minimize_cmd = app.add_subcommand("minimize", "Bisimulation quotient of a state");
    minimize_cmd->add_option("--state", state, "State JSON")->required();

    auto *reduce_cmd = app.add_subcommand("reduce", "Compile a PCP instance into a planning problem");
    auto *solve = app.add_subcommand("solve-pcp", "Reduce, search, and decode the match");
    for (auto *c : {reduce_cmd, solve}) {
        c->add_option("--pcp", pcp, "PCP JSON")->required();
        c->add_option("--variant", variant, "K1, MultiS5, KTB1 or S4_1");
    }
    bf.add(solve);

    auto *plan = app.add_subcommand("plan", "Search for a plan");
    plan->add_option("--problem", problem, "Problem JSON")->required();
    plan->add_flag("--s5", use_s5, "Use the single-agent Euclidean decision procedure");
    bf.add(plan);

    auto *lemmas = app.add_subcommand("verify-lemmas", "Run a randomized invariant suite");
    lemmas->add_option("--suite", suite, "lemmas, failure or shape")
        ->check(CLI::IsMember({"lemmas", "failure", "shape"}));
    lemmas->add_option("--variant", variant, "K1, MultiS5, KTB1 or S4_1");
    lemmas->add_option("--seed", seed, "Random seed");
    lemmas->add_option("--count", count, "Pairs, attempts or walks");
    lemmas->add_option("--max-len", max_len, "Longest encoded word (lemmas suite)");

    auto *sat = app.add_subcommand("sat2ep", "Compile a propositional formula into an S5 planning problem");
    sat->add_option("--formula", formula, "Formula text")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kInput;
    }

    try {
        if (*check) {
            if (formula.empty() == formula_file.empty()) throw FormatError("give --formula or --formula-file");
            auto s = state_from_json(read_json_file(state));
            Formula f = formula.empty() ? formula_from_json(read_json_file(formula_file)) : parse(formula);
            bool r = world.empty() ? evaluate(s, f) : evaluate_at(s, world, f);
            trace("evaluated " + print(f));
            return emit({{"result", r}}, r ? kOk : kFalse);
        }
        if (*update) {
            auto s = state_from_json(read_json_file(state));
            auto a = action_from_json(read_json_file(action));
            if (!applicable(s, a)) return emit({{"applicable", false}}, kFalse);
            auto out = product_update(s, a);
            return emit(to_json(minimize ? quotient(out) : out), kOk);
        }
        if (*apply || *verify) {
            auto p = problem_from_json(read_json_file(problem));
            Plan steps = plan_arg(plan_csv, plan_file);
            if (*verify) {
                bool ok = verify_plan(p, steps);
                return emit({{"valid", ok}}, ok ? kOk : kFalse);
            }
            auto r = apply_plan(p.initial, p.actions, steps, minimize);
            if (auto *f = std::get_if<FailureAt>(&r))
                return emit({{"applied", false}, {"failed_at", f->index}}, kFalse);
            const auto &s = std::get<EpistemicState>(r);
            return emit({{"applied", true}, {"goal", evaluate(s, p.goal)}, {"state", to_json(s)}}, kOk);
        }
        if (*bisim) {
            auto a = state_from_json(read_json_file(state));
            auto b = state_from_json(read_json_file(state2));
            bool r = bisimilar(a, b);
            return emit({{"bisimilar", r},
                         {"left_key", to_hex(canonical_key(a))},
                         {"right_key", to_hex(canonical_key(b))}},
                        r ? kOk : kFalse);
        }
        if (*minimize_cmd) return emit(to_json(quotient(state_from_json(read_json_file(state)))), kOk);
        if (*reduce_cmd) return emit(to_json(reduce(pcp_from_json(read_json_file(pcp)), parse_variant(variant))), kOk);
        if (*solve) {
            auto inst = pcp_from_json(read_json_file(pcp));
            auto v = parse_variant(variant);
            auto r = bfs_plan(reduce(inst, v), bf.budget(), trace);
            Json j = search_json(r);
            if (r.outcome == Outcome::PlanFound) {
                auto m = plan_to_match(r.plan, v);
                j["match"] = m;
                j["word"] = matched_word(inst, m);
            }
            return emit(j, outcome_code(r.outcome));
        }
        if (*plan) {
            auto p = problem_from_json(read_json_file(problem));
            auto r = use_s5 ? s5_single_agent_plan(p, trace) : bfs_plan(p, bf.budget(), trace);
            return emit(search_json(r), outcome_code(r.outcome));
        }
        if (*lemmas) {
            auto v = parse_variant(variant);
            SuiteReport r;
            if (suite == "lemmas") {
                LemmaConfig cfg;
                cfg.seed = seed;
                if (count) cfg.pairs = count;
                cfg.max_len = max_len ? max_len : (v == Variant::KTB1 || v == Variant::S4_1 ? 4 : 6);
                r = lemma_suite(v, cfg);
            } else if (suite == "failure") {
                r = failure_suite(v, seed, count ? count : 100);
            } else {
                r = plan_shape_suite(v, seed, count ? count : 500);
            }
            for (const auto &m : r.messages) trace("FAILED " + m);
            return emit({{"suite", r.name},
                         {"seed", seed},
                         {"cases", r.cases},
                         {"failures", r.failures},
                         {"messages", r.messages}},
                        r.passed() ? kOk : kFalse);
        }
        if (*sat) return emit(to_json(sat_to_ep(parse(formula))), kOk);
    } catch (const Error &e) {
        std::cerr << e.what() << "\n";
        return kInput;
    } catch (const Json::exception &e) {
        std::cerr << "FormatError: " << e.what() << "\n";
        return kInput;
    }
    return kInput;
}
