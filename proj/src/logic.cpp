#include "tapes/logic.hpp"

#include <algorithm>
#include <set>

#include "tapes/sugar.hpp"

namespace tapes {

namespace {

struct EncodedTriple {
    FinRel pre_op;   // 1 -> U
    FinRel cmd;      // U -> U
    FinRel post_op;  // 1 -> U
    FinRel pre;      // U -> 1
    FinRel post;     // U -> 1
};

EncodedTriple encode_triple(const Triple& t, const ProgramSignature& sig, const Interpretation& interp) {
    typecheck_pred(t.ctx, t.pre, sig);
    typecheck_pred(t.ctx, t.post, sig);
    typecheck_cmd(t.ctx, t.cmd, sig);
    TapePtr pre_tape = encode_pred(t.ctx, t.pre, sig);
    TapePtr post_tape = encode_pred(t.ctx, t.post, sig);
    TapePtr cmd_tape = encode_cmd(t.ctx, t.cmd, sig);
    EncodedTriple e;
    e.pre = eval(pre_tape, interp);
    e.post = eval(post_tape, interp);
    e.pre_op = eval(derived_converse(pre_tape), interp);
    e.post_op = eval(derived_converse(post_tape), interp);
    e.cmd = eval(cmd_tape, interp);
    return e;
}

CheckReport inclusion_report(const FinRel& lhs, const FinRel& rhs, const Context& ctx, bool state_on_right) {
    CheckReport rep;
    if (auto missing = lhs.first_missing_from(rhs)) {
        rep.holds = false;
        rep.witness = missing;
        int state = state_on_right ? missing->second : missing->first;
        const Carrier& carrier = state_on_right ? lhs.cod() : lhs.dom();
        rep.detail = "state " + ctx.state_name(carrier, state) + " violates the inclusion";
    }
    return rep;
}

}  // namespace

CheckReport check_triple(const Triple& triple, const ProgramSignature& sig, const Interpretation& interp) {
    Interpretation model = restrict_interpretation(sig, interp);
    EncodedTriple e = encode_triple(triple, sig, model);
    switch (triple.kind) {
        case TripleKind::Hoare:
            return inclusion_report(compose(e.pre_op, e.cmd), e.post_op, triple.ctx, true);
        case TripleKind::Incorrectness:
            return inclusion_report(e.post_op, compose(e.pre_op, e.cmd), triple.ctx, true);
        case TripleKind::SufficientIncorrectness:
            return inclusion_report(e.pre, compose(e.cmd, e.post), triple.ctx, false);
        case TripleKind::Necessary:
            return inclusion_report(compose(e.cmd, e.post), e.pre, triple.ctx, false);
    }
    throw Error("unreachable");
}

CheckReport check_quadruple(const Quadruple& quad, const ProgramSignature& sig, const Interpretation& interp) {
    Interpretation model = restrict_interpretation(sig, interp);
    Context joint = quad.ctx1 + quad.ctx2;
    typecheck_pred(joint, quad.pre, sig);
    typecheck_pred(joint, quad.post, sig);
    typecheck_cmd(quad.ctx1, quad.c1, sig);
    typecheck_cmd(quad.ctx2, quad.c2, sig);
    FinRel pre_op = eval(derived_converse(encode_pred(joint, quad.pre, sig)), model);
    FinRel post_op = eval(derived_converse(encode_pred(joint, quad.post, sig)), model);
    FinRel pair = eval(tensor_tapes(encode_cmd(quad.ctx1, quad.c1, sig), encode_cmd(quad.ctx2, quad.c2, sig)), model);
    return inclusion_report(compose(pre_op, pair), post_op, joint, true);
}

namespace {

void require(bool cond, const char* what) {
    if (!cond) throw SchemaMismatch(what);
}

void check_schema(HoareRule rule, const std::vector<Triple>& premises, const Triple& conclusion) {
    for (const Triple& p : premises) require(p.kind == TripleKind::Hoare, "premises must be hoare triples");
    require(conclusion.kind == TripleKind::Hoare, "conclusion must be a hoare triple");
    switch (rule) {
        case HoareRule::Skip:
            require(premises.empty(), "(skip) takes no premises");
            require(conclusion.cmd->kind == Cmd::Kind::Skip, "(skip) concludes a skip command");
            require(equal(conclusion.pre, conclusion.post), "(skip) requires P = Q");
            return;
        case HoareRule::Assn:
            require(premises.empty(), "(assn) takes no premises");
            require(conclusion.cmd->kind == Cmd::Kind::Assign, "(assn) concludes an assignment");
            return;  // the substituted precondition is checked by the caller with the signature
        case HoareRule::Conseq:
            require(premises.size() == 1, "(conseq) takes one triple premise");
            require(equal(premises[0].cmd, conclusion.cmd), "(conseq) keeps the command");
            return;
        case HoareRule::Seq:
            require(premises.size() == 2, "(seq) takes two premises");
            require(conclusion.cmd->kind == Cmd::Kind::Seq, "(seq) concludes a composition");
            require(equal(premises[0].cmd, conclusion.cmd->c1) && equal(premises[1].cmd, conclusion.cmd->c2),
                    "(seq) premises must cover the two components");
            require(equal(premises[0].post, premises[1].pre), "(seq) midcondition must match");
            require(equal(premises[0].pre, conclusion.pre) && equal(premises[1].post, conclusion.post),
                    "(seq) outer conditions must match");
            return;
        case HoareRule::If: {
            require(premises.size() == 2, "(if) takes two premises");
            require(conclusion.cmd->kind == Cmd::Kind::If, "(if) concludes a conditional");
            const PredPtr& guard = conclusion.cmd->guard;
            require(equal(premises[0].cmd, conclusion.cmd->c1) && equal(premises[1].cmd, conclusion.cmd->c2),
                    "(if) premises must cover the branches");
            require(equal(premises[0].pre, pred_and(conclusion.pre, guard)), "(if) first premise needs P && B");
            require(equal(premises[1].pre, pred_and(conclusion.pre, negate(guard))),
                    "(if) second premise needs P && !B");
            require(equal(premises[0].post, conclusion.post) && equal(premises[1].post, conclusion.post),
                    "(if) premise postconditions must match");
            return;
        }
        case HoareRule::While: {
            require(premises.size() == 1, "(while) takes one premise");
            require(conclusion.cmd->kind == Cmd::Kind::While, "(while) concludes a loop");
            const PredPtr& guard = conclusion.cmd->guard;
            require(equal(premises[0].cmd, conclusion.cmd->c1), "(while) premise must cover the body");
            require(equal(premises[0].pre, pred_and(conclusion.pre, guard)), "(while) premise needs P && B");
            require(equal(premises[0].post, conclusion.pre), "(while) premise must restore the invariant");
            require(equal(conclusion.post, pred_and(conclusion.pre, negate(guard))),
                    "(while) conclusion needs P && !B");
            return;
        }
    }
    throw Error("unreachable");
}

}  // namespace

CheckReport verify_hoare_rule_instance(HoareRule rule, const std::vector<Triple>& premises, const Triple& conclusion,
                                       const ProgramSignature& sig, const Interpretation& interp) {
    check_schema(rule, premises, conclusion);
    Interpretation model = restrict_interpretation(sig, interp);

    if (rule == HoareRule::Assn) {
        PredPtr expected = substitute(conclusion.ctx, sig, conclusion.post, conclusion.cmd->expr, conclusion.cmd->var);
        if (!equal(conclusion.pre, expected)) throw SchemaMismatch("(assn) requires the precondition P[e/x]");
    }

    for (std::size_t i = 0; i < premises.size(); ++i) {
        if (!check_triple(premises[i], sig, model).holds) {
            CheckReport rep;
            rep.detail = "premise " + std::to_string(i) + " not valid in the model; instance vacuously sound";
            return rep;
        }
    }
    if (rule == HoareRule::Conseq) {
        // side conditions P1 <= P2 and Q2 <= Q1, checked semantically
        FinRel p1 = eval(encode_pred(conclusion.ctx, conclusion.pre, sig), model);
        FinRel p2 = eval(encode_pred(premises[0].ctx, premises[0].pre, sig), model);
        FinRel q2 = eval(encode_pred(premises[0].ctx, premises[0].post, sig), model);
        FinRel q1 = eval(encode_pred(conclusion.ctx, conclusion.post, sig), model);
        if (!p1.subset_of(p2) || !q2.subset_of(q1)) {
            CheckReport rep;
            rep.detail = "a side condition fails in the model; instance vacuously sound";
            return rep;
        }
    }
    CheckReport rep = check_triple(conclusion, sig, model);
    if (!rep.holds) rep.detail = "soundness violation: premises hold but conclusion fails; " + rep.detail;
    return rep;
}

namespace {

struct Delims {
    TripleKind kind;
    std::string open, close;
};

const Delims kDelims[] = {
    {TripleKind::SufficientIncorrectness, "<<", ">>"},
    {TripleKind::Hoare, "{", "}"},
    {TripleKind::Incorrectness, "[", "]"},
    {TripleKind::Necessary, "(", ")"},
};

std::size_t skip_ws(const std::string& s, std::size_t i) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    return i;
}

// span of the balanced group starting at `from` (which must point at
// the opening delimiter); returns the position just past the closer and
// the enclosed text.
std::pair<std::string, std::size_t> balanced(const std::string& s, std::size_t from, const Delims& d) {
    std::size_t i = from + d.open.size();
    int depth = 1;
    std::string body;
    while (i < s.size()) {
        if (s.compare(i, d.open.size(), d.open) == 0 && d.open != d.close) {
            ++depth;
            body += d.open;
            i += d.open.size();
            continue;
        }
        if (s.compare(i, d.close.size(), d.close) == 0) {
            --depth;
            if (depth == 0) return {body, i + d.close.size()};
            body += d.close;
            i += d.close.size();
            continue;
        }
        body += s[i++];
    }
    throw SyntaxError("missing '" + d.close + "'", from);
}

}  // namespace

// splits "<open>P<close> middle <open>Q<close>" into its three parts
struct SplitTriple {
    std::string pre, middle, post;
};

SplitTriple split_on_delims(const std::string& text, std::size_t start, const Delims& d) {
    auto [pre_text, after_pre] = balanced(text, start, d);

    // the postcondition is the last balanced group; scan from the end
    std::size_t end = text.size();
    while (end > after_pre && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
    if (end < d.close.size() || text.compare(end - d.close.size(), d.close.size(), d.close) != 0)
        throw SyntaxError("expected a closing postcondition delimiter", end);
    int depth = 1;
    std::size_t j = end - d.close.size();
    while (j > after_pre) {
        --j;
        if (text.compare(j, d.close.size(), d.close) == 0 && d.open != d.close)
            ++depth;
        else if (text.compare(j, d.open.size(), d.open) == 0) {
            --depth;
            if (depth == 0) break;
        }
    }
    if (depth != 0) throw SyntaxError("expected an opening postcondition delimiter", after_pre);
    return {pre_text, text.substr(after_pre, j - after_pre),
            text.substr(j + d.open.size(), end - d.close.size() - j - d.open.size())};
}

Triple parse_triple(const std::string& text, Context ctx) {
    std::size_t start = skip_ws(text, 0);
    const Delims* delims = nullptr;
    for (const Delims& d : kDelims) {
        if (text.compare(start, d.open.size(), d.open) == 0) {
            delims = &d;
            break;
        }
    }
    if (!delims) throw SyntaxError("expected a triple opening delimiter", start);
    SplitTriple parts = split_on_delims(text, start, *delims);

    Triple t;
    t.kind = delims->kind;
    t.ctx = std::move(ctx);
    t.pre = parse_pred(parts.pre);
    t.post = parse_pred(parts.post);
    t.cmd = parse_program(parts.middle);
    return t;
}

Quadruple parse_quadruple(const std::string& text, Context ctx1, Context ctx2) {
    std::size_t i = skip_ws(text, 0);
    if (text.compare(i, 3, "rel") != 0) throw SyntaxError("expected 'rel'", i);
    std::size_t start = skip_ws(text, i + 3);
    if (text.compare(start, 1, "{") != 0) throw SyntaxError("expected '{'", start);
    SplitTriple parts = split_on_delims(text, start, kDelims[1]);
    std::size_t tilde = parts.middle.find('~');
    if (tilde == std::string::npos) throw SyntaxError("expected '~' between the two commands", start);
    Quadruple q;
    q.ctx1 = std::move(ctx1);
    q.ctx2 = std::move(ctx2);
    q.pre = parse_pred(parts.pre);
    q.post = parse_pred(parts.post);
    q.c1 = parse_program(parts.middle.substr(0, tilde));
    q.c2 = parse_program(parts.middle.substr(tilde + 1));
    return q;
}

namespace {

std::optional<int> expr_value(const ExprPtr& e, const Context& ctx, const ProgramSignature& sig,
                              const Interpretation& interp, const std::vector<int>& state) {
    if (e->kind == Expr::Kind::Var) {
        auto i = ctx.find(e->var);
        if (!i) throw UnboundVariable("variable '" + e->var + "' not in context");
        return state[*i];
    }
    std::vector<int> args;
    args.reserve(e->args.size());
    for (const ExprPtr& a : e->args) {
        auto v = expr_value(a, ctx, sig, interp, state);
        if (!v) return std::nullopt;
        args.push_back(*v);
    }
    const FinRel& graph = interp.relation(e->fn);
    int x = graph.dom().index_of(0, args);
    for (auto [p, q] : graph.pairs())
        if (p == x) return q;
    return std::nullopt;
}

std::optional<bool> pred_value(const PredPtr& p, const Context& ctx, const ProgramSignature& sig,
                               const Interpretation& interp, const std::vector<int>& state) {
    switch (p->kind) {
        case Pred::Kind::Atom:
        case Pred::Kind::NAtom: {
            std::vector<int> args;
            args.reserve(p->args.size());
            for (const ExprPtr& a : p->args) {
                auto v = expr_value(a, ctx, sig, interp, state);
                if (!v) return std::nullopt;
                args.push_back(*v);
            }
            std::string name = p->kind == Pred::Kind::Atom ? p->pred : ProgramSignature::complement_name(p->pred);
            const FinRel& rel = interp.relation(name);
            return rel.contains(rel.dom().index_of(0, args), 0);
        }
        case Pred::Kind::Top:
            return true;
        case Pred::Kind::Bot:
            return false;
        case Pred::Kind::And: {
            auto l = pred_value(p->lhs, ctx, sig, interp, state);
            auto r = pred_value(p->rhs, ctx, sig, interp, state);
            if (!l || !r) return std::nullopt;
            return *l && *r;
        }
        case Pred::Kind::Or: {
            auto l = pred_value(p->lhs, ctx, sig, interp, state);
            auto r = pred_value(p->rhs, ctx, sig, interp, state);
            if (!l || !r) return std::nullopt;
            return *l || *r;
        }
    }
    throw Error("unreachable");
}

std::optional<std::vector<int>> step_command(const CmdPtr& c, const Context& ctx, const ProgramSignature& sig,
                                             const Interpretation& interp, std::vector<int> state) {
    switch (c->kind) {
        case Cmd::Kind::Abort:
            return std::nullopt;
        case Cmd::Kind::Skip:
            return state;
        case Cmd::Kind::Seq: {
            auto mid = step_command(c->c1, ctx, sig, interp, std::move(state));
            if (!mid) return std::nullopt;
            return step_command(c->c2, ctx, sig, interp, std::move(*mid));
        }
        case Cmd::Kind::If: {
            auto g = pred_value(c->guard, ctx, sig, interp, state);
            if (!g) return std::nullopt;
            return step_command(*g ? c->c1 : c->c2, ctx, sig, interp, std::move(state));
        }
        case Cmd::Kind::While: {
            std::set<std::vector<int>> visited;
            for (;;) {
                auto g = pred_value(c->guard, ctx, sig, interp, state);
                if (!g) return std::nullopt;
                if (!*g) return state;
                if (!visited.insert(state).second) return std::nullopt;  // diverges
                auto next = step_command(c->c1, ctx, sig, interp, std::move(state));
                if (!next) return std::nullopt;
                state = std::move(*next);
            }
        }
        case Cmd::Kind::Assign: {
            auto slot = ctx.find(c->var);
            if (!slot) throw UnboundVariable("variable '" + c->var + "' not in context");
            auto v = expr_value(c->expr, ctx, sig, interp, state);
            if (!v) return std::nullopt;
            state[*slot] = *v;
            return state;
        }
    }
    throw Error("unreachable");
}

}  // namespace

std::optional<int> run_command(const CmdPtr& c, const Context& ctx, const ProgramSignature& sig,
                               const Interpretation& interp, int state) {
    Carrier carrier = interp.carrier(ctx.word());
    auto out = step_command(c, ctx, sig, interp, carrier.tuple_of(state));
    if (!out) return std::nullopt;
    return carrier.index_of(0, *out);
}

}  // namespace tapes
