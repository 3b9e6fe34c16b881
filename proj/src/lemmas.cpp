#include "epi/lemmas.hpp"

#include <random>
#include <sstream>

#include "epi/bisim.hpp"
#include "epi/frames.hpp"

namespace epi {

namespace {

using Rng = std::mt19937_64;

std::size_t pick(Rng &rng, std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); }

std::string bits(Rng &rng, std::size_t min_len, std::size_t max_len) {
    std::string w;
    for (std::size_t i = 0, n = min_len + pick(rng, max_len - min_len + 1); i < n; ++i)
        w += pick(rng, 2) ? '1' : '0';
    return w;
}

PcpInstance random_instance(Rng &rng, std::size_t blocks, std::size_t max_len) {
    PcpInstance inst;
    for (std::size_t i = 0; i < blocks; ++i) inst.blocks.emplace_back(bits(rng, 0, max_len), bits(rng, 0, max_len));
    // An empty side is legal and exercises the degenerate event sets.
    if (inst.blocks[0].first.empty() && inst.blocks[0].second.empty()) inst.blocks[0].first = "1";
    return inst;
}

std::string flip(const std::string &bt) { return bt == "0" ? "1" : "0"; }

// Flavors visited while removing one letter, before the final bit step.
std::vector<Flavor> separator_flavors(Variant v) {
    switch (v) {
    case Variant::K1: return {};
    case Variant::MultiS5:
    case Variant::S4_1: return {Flavor::MinusHash};
    case Variant::KTB1: return {Flavor::MinusHash2, Flavor::MinusHash1};
    }
    return {};
}

Flavor before_bit(Variant v) {
    auto f = separator_flavors(v);
    return f.empty() ? Flavor::Plain : f.back();
}

class Recorder {
public:
    explicit Recorder(SuiteReport &r) : r_(r) {}
    void check(bool ok, const std::string &what) {
        ++r_.cases;
        if (ok) return;
        ++r_.failures;
        if (r_.messages.size() < 10) r_.messages.push_back(what);
    }

private:
    SuiteReport &r_;
};

std::string tag(const std::string &lemma, const std::string &qa, const std::string &qb) {
    return lemma + " qa=" + qa + " qb=" + qb;
}

} // namespace

SuiteReport lemma_suite(Variant v, const LemmaConfig &cfg) {
    SuiteReport report{std::string("lemmas ") + to_string(v), 0, 0, {}};
    Recorder rec(report);
    Rng rng(cfg.seed);
    const auto conds = logic_of(v).conds;
    const PcpInstance inst = random_instance(rng, cfg.blocks, cfg.max_block_len);

    // Applies `a` when possible; the result must stay inside the logic.
    auto step = [&](const EpistemicState &s, const EventModel &a, const std::string &what,
                    EpistemicState &out) {
        if (!applicable(s, a)) {
            rec.check(false, what + ": not applicable");
            return false;
        }
        out = product_update(s, a);
        if (!satisfies(out.model, conds)) {
            rec.check(false, what + ": frame conditions violated");
            return false;
        }
        return true;
    };

    std::vector<EventModel> ads;
    for (std::size_t i = 1; i <= inst.blocks.size(); ++i) ads.push_back(add_block_action(v, inst, i));
    const EventModel ns = next_stage_action(v);
    const auto empty_loop = oracle_state(v, "", "", Flavor::Loop);
    for (std::size_t i = 0; i < ads.size(); ++i) {
        EpistemicState a, b;
        const std::string what = "first block " + std::to_string(i + 1);
        if (step(initial_state(v), ads[i], what, a) && step(empty_loop, ads[i], what, b))
            rec.check(bisimilar(a, b), what);
    }

    for (std::size_t t = 0; t < cfg.pairs; ++t) {
        const std::string qa = bits(rng, 0, cfg.max_len), qb = bits(rng, 0, cfg.max_len);
        const auto loop = oracle_state(v, qa, qb, Flavor::Loop);
        for (std::size_t i = 0; i < ads.size(); ++i) {
            const auto &[ta, tb] = inst.blocks[i];
            const std::string what = tag("adding block " + std::to_string(i + 1), qa, qb);
            EpistemicState out;
            if (step(loop, ads[i], what, out))
                rec.check(bisimilar(out, oracle_state(v, extend_word(v, qa, ta), extend_word(v, qb, tb),
                                                      Flavor::Loop)),
                          what);
        }
        const auto plain = oracle_state(v, qa, qb, Flavor::Plain);
        EpistemicState out;
        if (step(loop, ns, tag("next_stage", qa, qb), out))
            rec.check(bisimilar(out, plain), tag("next_stage", qa, qb));

        for (const std::string bt : {"0", "1"}) {
            const std::string what = tag("removing " + bt, qa + bt, qb + bt);
            EpistemicState cur = oracle_state(v, qa + bt, qb + bt, Flavor::Plain);
            const Plan steps = removal_plan(bt, v);
            const auto flavors = separator_flavors(v);
            bool ok = true;
            for (std::size_t k = 0; ok && k < steps.size(); ++k) {
                const auto rm = remove_action(v, steps[k].substr(std::string("remove_").size()));
                EpistemicState next;
                ok = step(cur, rm, what + " step " + steps[k], next);
                if (!ok) break;
                const auto expect = k < flavors.size() ? oracle_state(v, qa + bt, qb + bt, flavors[k]) : plain;
                ok = bisimilar(next, expect) && !failed_state_check(next, v);
                rec.check(ok, what + " step " + steps[k]);
                cur = std::move(next);
            }
        }
    }
    return report;
}

SuiteReport failure_suite(Variant v, std::uint64_t seed, std::size_t attempts) {
    SuiteReport report{std::string("failure ") + to_string(v), 0, 0, {}};
    Rng rng(seed);
    const Formula goal = goal_formula(v);
    for (std::size_t t = 0; t < attempts; ++t) {
        const PcpInstance inst = random_instance(rng, 2, 2);
        const auto prob = reduce(inst, v);
        const std::string qa = bits(rng, 0, 5), qb = bits(rng, 0, 5), bt = pick(rng, 2) ? "1" : "0";
        const bool has_separator = v != Variant::K1;
        const std::size_t kind = pick(rng, has_separator ? 3 : 2);
        EpistemicState s;
        std::string wrong, what;
        if (kind == 0) {  // wrong bit
            s = oracle_state(v, qa + bt, qb + bt, before_bit(v));
            wrong = flip(bt);
            what = "wrong bit";
        } else if (kind == 1) {  // sides disagree on the last bit
            s = oracle_state(v, qa + bt, qb + flip(bt), before_bit(v));
            wrong = bt;
            what = "mismatched sides";
        } else {  // a bit where a separator is due
            s = oracle_state(v, qa + bt, qb + bt, Flavor::Plain);
            wrong = bt;
            what = "bit before separator";
        }
        std::ostringstream os;
        os << what << " qa=" << qa << " qb=" << qb << " bt=" << bt;
        ++report.cases;
        auto fail = [&](const std::string &why) {
            ++report.failures;
            if (report.messages.size() < 10) report.messages.push_back(os.str() + ": " + why);
        };
        const auto &rm = prob.actions.at(remove_name(wrong));
        if (!applicable(s, rm)) {
            fail("removal not applicable");
            continue;
        }
        s = quotient(product_update(s, rm));
        bool ok = failed_state_check(s, v) && !evaluate(s, goal);
        if (!ok) {
            fail("not failed after the wrong removal");
            continue;
        }
        for (int k = 0; ok && k < 6; ++k) {
            std::vector<const EventModel *> next;
            for (const auto &[n, a] : prob.actions)
                if (applicable(s, a)) next.push_back(&a);
            if (next.empty()) break;
            s = quotient(product_update(s, *next[pick(rng, next.size())]));
            ok = failed_state_check(s, v) && !evaluate(s, goal);
        }
        if (!ok) fail("failure not absorbed by the continuation");
    }
    return report;
}

SuiteReport plan_shape_suite(Variant v, std::uint64_t seed, std::size_t walks, std::size_t max_steps) {
    SuiteReport report{std::string("plan shape ") + to_string(v), 0, 0, {}};
    Rng rng(seed);
    for (std::size_t t = 0; t < walks; ++t) {
        const auto prob = reduce(random_instance(rng, 1 + pick(rng, 3), 3), v);
        EpistemicState s = prob.initial;
        bool second_phase = false, ok = true;
        Plan walk;
        for (std::size_t k = 0; ok && k < max_steps; ++k) {
            std::vector<std::string> next;
            for (const auto &[n, a] : prob.actions)
                if (applicable(s, a)) next.push_back(n);
            if (second_phase)
                for (const auto &n : next)
                    if (n == kNextStage || n.rfind("ad_", 0) == 0) ok = false;
            if (!ok || next.empty()) break;
            const std::string &n = next[pick(rng, next.size())];
            walk.push_back(n);
            second_phase = second_phase || n.rfind("ad_", 0) != 0;
            s = quotient(product_update(s, prob.actions.at(n)));
        }
        ++report.cases;
        if (!ok) {
            ++report.failures;
            std::string w;
            for (const auto &n : walk) w += n + " ";
            if (report.messages.size() < 10) report.messages.push_back("walk " + w);
        }
    }
    return report;
}

} // namespace epi
