#include "epi/formula.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

namespace epi {

Formula::Formula() : Formula(make_false()) {}

Formula Formula::make_false() {
    static const Formula f(std::make_shared<const Node>());
    return f;
}

Formula Formula::make_prop(Prop p) {
    Node n;
    n.op = Op::Prop;
    n.prop = p;
    return Formula(std::make_shared<const Node>(std::move(n)));
}

Formula Formula::make_not(Formula f) {
    Node n;
    n.op = Op::Not;
    n.depth = f.depth();
    n.agent_bound = f.agent_bound();
    n.lhs = std::make_shared<const Formula>(std::move(f));
    return Formula(std::make_shared<const Node>(std::move(n)));
}

Formula Formula::make_and(Formula a, Formula b) {
    Node n;
    n.op = Op::And;
    n.depth = std::max(a.depth(), b.depth());
    n.agent_bound = std::max(a.agent_bound(), b.agent_bound());
    n.lhs = std::make_shared<const Formula>(std::move(a));
    n.rhs = std::make_shared<const Formula>(std::move(b));
    return Formula(std::make_shared<const Node>(std::move(n)));
}

Formula Formula::make_know(AgentId i, Formula f) {
    Node n;
    n.op = Op::Know;
    n.agent = i;
    n.depth = f.depth() + 1;
    n.agent_bound = std::max(i + 1, f.agent_bound());
    n.lhs = std::make_shared<const Formula>(std::move(f));
    return Formula(std::make_shared<const Node>(std::move(n)));
}

bool operator==(const Formula &a, const Formula &b) {
    if (a.node_ == b.node_) return true;
    if (a.op() != b.op() || a.depth() != b.depth()) return false;
    switch (a.op()) {
    case Op::False: return true;
    case Op::Prop: return a.prop() == b.prop();
    case Op::Not: return a.arg() == b.arg();
    case Op::And: return a.lhs() == b.lhs() && a.rhs() == b.rhs();
    case Op::Know: return a.agent() == b.agent() && a.arg() == b.arg();
    }
    return false;
}

Formula False() { return Formula::make_false(); }
Formula Top() { return Not(False()); }
Formula P(std::string_view name) { return Formula::make_prop(Prop(name)); }
Formula Not(Formula f) { return Formula::make_not(std::move(f)); }
Formula And(Formula a, Formula b) { return Formula::make_and(std::move(a), std::move(b)); }
Formula Or(Formula a, Formula b) { return Not(And(Not(std::move(a)), Not(std::move(b)))); }
Formula Implies(Formula a, Formula b) { return Or(Not(std::move(a)), std::move(b)); }
Formula Know(AgentId i, Formula f) { return Formula::make_know(i, std::move(f)); }
Formula Diamond(AgentId i, Formula f) { return Not(Know(i, Not(std::move(f)))); }

int modal_depth(const Formula &f) { return f.depth(); }

std::set<std::string> props_of(const Formula &f) {
    std::set<std::string> out;
    std::function<void(const Formula &)> go = [&](const Formula &g) {
        switch (g.op()) {
        case Op::False: break;
        case Op::Prop: out.insert(g.prop().name()); break;
        case Op::Not:
        case Op::Know: go(g.arg()); break;
        case Op::And: go(g.lhs()); go(g.rhs()); break;
        }
    };
    go(f);
    return out;
}

bool holds(const KripkeModel &m, NodeIx w, const Formula &f) {
    switch (f.op()) {
    case Op::False: return false;
    case Op::Prop: return propset_contains(m.val(w), f.prop());
    case Op::Not: return !holds(m, w, f.arg());
    case Op::And: return holds(m, w, f.lhs()) && holds(m, w, f.rhs());
    case Op::Know:
        for (NodeIx v : m.succ(f.agent(), w))
            if (!holds(m, v, f.arg())) return false;
        return true;
    }
    return false;
}

bool evaluate(const EpistemicState &s, const Formula &f) {
    if (f.agent_bound() > s.model.agents())
        throw UnknownAgent("formula mentions agent " + std::to_string(f.agent_bound() - 1));
    return holds(s.model, s.designated, f);
}

bool evaluate_at(const EpistemicState &s, const std::string &w, const Formula &f) {
    if (!s.model.contains(w)) throw UnknownWorld(w);
    return evaluate(EpistemicState{s.model, s.model.index_of(w)}, f);
}

// ---------------------------------------------------------------------------
// parser

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : s_(text) {}

    Formula parse_all() {
        Formula f = implication();
        skip();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return f;
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string &msg) const { throw SyntaxError(msg, pos_); }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(std::string_view tok) {
        skip();
        if (s_.substr(pos_, tok.size()) == tok) {
            pos_ += tok.size();
            return true;
        }
        return false;
    }

    void expect(std::string_view tok) {
        if (!eat(tok)) fail("expected '" + std::string(tok) + "'");
    }

    static bool ident_char(char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '#';
    }

    std::string_view peek_ident() {
        skip();
        std::size_t e = pos_;
        while (e < s_.size() && ident_char(s_[e])) ++e;
        return s_.substr(pos_, e - pos_);
    }

    Formula implication() {
        Formula lhs = disjunction();
        if (eat("->")) return Implies(lhs, implication());
        return lhs;
    }

    Formula disjunction() {
        Formula f = conjunction();
        while (eat("|")) f = Or(f, conjunction());
        return f;
    }

    Formula conjunction() {
        Formula f = unary();
        while (eat("&")) f = And(f, unary());
        return f;
    }

    AgentId agent_index() {
        if (!eat("{")) return 0;
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected agent index");
        AgentId i = std::stoul(std::string(s_.substr(start, pos_ - start)));
        expect("}");
        return i;
    }

    Formula unary() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        if (eat("!")) return Not(unary());
        if (eat("(")) {
            Formula f = implication();
            expect(")");
            return f;
        }
        if (eat("<")) {
            expect("K");
            AgentId i = agent_index();
            expect(">");
            return Diamond(i, unary());
        }
        std::string_view id = peek_ident();
        if (id.empty()) fail("unexpected character");
        if (id == "K") {
            pos_ += 1;
            AgentId i = agent_index();
            return Know(i, unary());
        }
        pos_ += id.size();
        if (id == "false") return False();
        if (id == "true") return Top();
        return P(id);
    }
};

// Precedence levels: 0 ->, 1 |, 2 &, 3 unary/atom.
void emit(const Formula &f, int ctx, std::string &out) {
    auto wrap = [&](int prec, auto body) {
        bool paren = prec < ctx;
        if (paren) out += '(';
        body();
        if (paren) out += ')';
    };
    switch (f.op()) {
    case Op::False: out += "false"; return;
    case Op::Prop: out += f.prop().name(); return;
    case Op::And:
        wrap(2, [&] {
            emit(f.lhs(), 2, out);
            out += " & ";
            emit(f.rhs(), 3, out);
        });
        return;
    case Op::Know:
        out += "K{" + std::to_string(f.agent()) + "} ";
        emit(f.arg(), 3, out);
        return;
    case Op::Not: break;
    }
    const Formula &g = f.arg();
    if (g.op() == Op::False) {
        out += "true";
        return;
    }
    if (g.op() == Op::And && g.lhs().op() == Op::Not && g.rhs().op() == Op::Not) {
        wrap(1, [&] {
            emit(g.lhs().arg(), 1, out);
            out += " | ";
            emit(g.rhs().arg(), 2, out);
        });
        return;
    }
    if (g.op() == Op::Know && g.arg().op() == Op::Not) {
        out += "<K{" + std::to_string(g.agent()) + "}> ";
        emit(g.arg().arg(), 3, out);
        return;
    }
    out += '!';
    emit(g, 3, out);
}

} // namespace

Formula parse(std::string_view text) { return Parser(text).parse_all(); }

std::string print(const Formula &f) {
    std::string out;
    emit(f, 0, out);
    return out;
}

} // namespace epi
