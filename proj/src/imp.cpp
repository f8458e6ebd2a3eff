#include "tapes/imp.hpp"

#include <cctype>

#include "tapes/sugar.hpp"

namespace tapes {

namespace {
ExprPtr enode(Expr e) { return std::make_shared<const Expr>(std::move(e)); }
PredPtr pnode(Pred p) { return std::make_shared<const Pred>(std::move(p)); }
CmdPtr cnode(Cmd c) { return std::make_shared<const Cmd>(std::move(c)); }
}  // namespace

ExprPtr expr_var(std::string x) { return enode({Expr::Kind::Var, std::move(x), {}, {}}); }
ExprPtr expr_app(std::string f, std::vector<ExprPtr> args) {
    return enode({Expr::Kind::App, {}, std::move(f), std::move(args)});
}

PredPtr pred_atom(std::string r, std::vector<ExprPtr> args) {
    return pnode({Pred::Kind::Atom, std::move(r), std::move(args), nullptr, nullptr});
}
PredPtr pred_natom(std::string r, std::vector<ExprPtr> args) {
    return pnode({Pred::Kind::NAtom, std::move(r), std::move(args), nullptr, nullptr});
}
PredPtr pred_top() { return pnode({Pred::Kind::Top, {}, {}, nullptr, nullptr}); }
PredPtr pred_bot() { return pnode({Pred::Kind::Bot, {}, {}, nullptr, nullptr}); }
PredPtr pred_and(PredPtr a, PredPtr b) { return pnode({Pred::Kind::And, {}, {}, std::move(a), std::move(b)}); }
PredPtr pred_or(PredPtr a, PredPtr b) { return pnode({Pred::Kind::Or, {}, {}, std::move(a), std::move(b)}); }

CmdPtr cmd_abort() { return cnode({Cmd::Kind::Abort, nullptr, nullptr, nullptr, {}, nullptr}); }
CmdPtr cmd_skip() { return cnode({Cmd::Kind::Skip, nullptr, nullptr, nullptr, {}, nullptr}); }
CmdPtr cmd_if(PredPtr guard, CmdPtr t, CmdPtr e) {
    return cnode({Cmd::Kind::If, std::move(guard), std::move(t), std::move(e), {}, nullptr});
}
CmdPtr cmd_while(PredPtr guard, CmdPtr body) {
    return cnode({Cmd::Kind::While, std::move(guard), std::move(body), nullptr, {}, nullptr});
}
CmdPtr cmd_seq(CmdPtr a, CmdPtr b) {
    return cnode({Cmd::Kind::Seq, nullptr, std::move(a), std::move(b), {}, nullptr});
}
CmdPtr cmd_assign(std::string x, ExprPtr e) {
    return cnode({Cmd::Kind::Assign, nullptr, nullptr, nullptr, std::move(x), std::move(e)});
}

bool equal(const ExprPtr& a, const ExprPtr& b) {
    if (a.get() == b.get()) return true;
    if (!a || !b) return false;
    if (a->kind != b->kind || a->var != b->var || a->fn != b->fn || a->args.size() != b->args.size()) return false;
    for (std::size_t i = 0; i < a->args.size(); ++i)
        if (!equal(a->args[i], b->args[i])) return false;
    return true;
}

bool equal(const PredPtr& a, const PredPtr& b) {
    if (a.get() == b.get()) return true;
    if (!a || !b) return false;
    if (a->kind != b->kind || a->pred != b->pred || a->args.size() != b->args.size()) return false;
    for (std::size_t i = 0; i < a->args.size(); ++i)
        if (!equal(a->args[i], b->args[i])) return false;
    return equal(a->lhs, b->lhs) && equal(a->rhs, b->rhs);
}

bool equal(const CmdPtr& a, const CmdPtr& b) {
    if (a.get() == b.get()) return true;
    if (!a || !b) return false;
    if (a->kind != b->kind || a->var != b->var) return false;
    return equal(a->guard, b->guard) && equal(a->c1, b->c1) && equal(a->c2, b->c2) && equal(a->expr, b->expr);
}

void Context::push(const std::string& x, const Sort& a) {
    if (find(x)) throw Error("variable '" + x + "' already bound in the context");
    vars.emplace_back(x, a);
}

std::optional<std::size_t> Context::find(const std::string& x) const {
    for (std::size_t i = 0; i < vars.size(); ++i)
        if (vars[i].first == x) return i;
    return std::nullopt;
}

Monomial Context::word() const {
    Monomial u;
    for (const auto& [x, a] : vars) u.factors.push_back(a);
    return u;
}

std::string Context::state_name(const Carrier& carrier, int state) const {
    std::vector<int> t = carrier.tuple_of(state);
    std::string s;
    for (std::size_t i = 0; i < vars.size(); ++i) {
        if (i) s += ", ";
        s += vars[i].first + "=" + std::to_string(t[i]);
    }
    return s.empty() ? "()" : s;
}

Context operator+(const Context& a, const Context& b) {
    Context joint = a;
    for (const auto& [x, s] : b.vars) joint.push(x, s);
    return joint;
}

namespace {

struct Lexer {
    const std::string& text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool at_end() {
        skip_ws();
        return pos >= text.size();
    }

    bool peek_symbol(const std::string& sym) {
        skip_ws();
        return text.compare(pos, sym.size(), sym) == 0;
    }

    bool eat_symbol(const std::string& sym) {
        if (!peek_symbol(sym)) return false;
        pos += sym.size();
        return true;
    }

    std::optional<std::string> peek_ident() {
        skip_ws();
        if (pos >= text.size()) return std::nullopt;
        if (!std::isalpha(static_cast<unsigned char>(text[pos])) && text[pos] != '_') return std::nullopt;
        std::size_t end = pos;
        while (end < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[end])) || text[end] == '_' || text[end] == '\''))
            ++end;
        return text.substr(pos, end - pos);
    }

    std::string expect_ident(const char* what) {
        auto id = peek_ident();
        if (!id) throw SyntaxError(std::string("expected ") + what, pos);
        pos += id->size();
        return *id;
    }

    bool eat_keyword(const std::string& kw) {
        auto id = peek_ident();
        if (id && *id == kw) {
            pos += kw.size();
            return true;
        }
        return false;
    }

    void expect_keyword(const std::string& kw) {
        if (!eat_keyword(kw)) throw SyntaxError("expected '" + kw + "'", pos);
    }

    void expect_symbol(const std::string& sym) {
        if (!eat_symbol(sym)) throw SyntaxError("expected '" + sym + "'", pos);
    }
};

bool is_keyword(const std::string& id) {
    return id == "skip" || id == "abort" || id == "if" || id == "then" || id == "else" || id == "end" ||
           id == "while" || id == "do" || id == "true" || id == "false";
}

PredPtr parse_pred_or(Lexer& lx);

ExprPtr parse_expr_impl(Lexer& lx) {
    std::string id = lx.expect_ident("an expression");
    if (is_keyword(id)) throw SyntaxError("keyword '" + id + "' used as an expression", lx.pos - id.size());
    if (!lx.eat_symbol("(")) return expr_var(id);
    std::vector<ExprPtr> args;
    if (!lx.eat_symbol(")")) {
        args.push_back(parse_expr_impl(lx));
        while (lx.eat_symbol(",")) args.push_back(parse_expr_impl(lx));
        lx.expect_symbol(")");
    }
    return expr_app(id, std::move(args));
}

PredPtr parse_pred_atom(Lexer& lx) {
    if (lx.eat_symbol("(")) {
        PredPtr p = parse_pred_or(lx);
        lx.expect_symbol(")");
        return p;
    }
    bool complemented = lx.eat_symbol("!");
    if (lx.eat_keyword("true")) {
        if (complemented) return pred_bot();
        return pred_top();
    }
    if (lx.eat_keyword("false")) {
        if (complemented) return pred_top();
        return pred_bot();
    }
    std::string r = lx.expect_ident("a predicate symbol");
    std::vector<ExprPtr> args;
    if (lx.eat_symbol("(")) {
        if (!lx.eat_symbol(")")) {
            args.push_back(parse_expr_impl(lx));
            while (lx.eat_symbol(",")) args.push_back(parse_expr_impl(lx));
            lx.expect_symbol(")");
        }
    }
    return complemented ? pred_natom(r, std::move(args)) : pred_atom(r, std::move(args));
}

PredPtr parse_pred_and(Lexer& lx) {
    PredPtr p = parse_pred_atom(lx);
    while (lx.eat_symbol("&&")) p = pred_and(p, parse_pred_atom(lx));
    return p;
}

PredPtr parse_pred_or(Lexer& lx) {
    PredPtr p = parse_pred_and(lx);
    while (lx.eat_symbol("||")) p = pred_or(p, parse_pred_and(lx));
    return p;
}

CmdPtr parse_cmd_single(Lexer& lx);

CmdPtr parse_cmd_seq(Lexer& lx) {
    CmdPtr c = parse_cmd_single(lx);
    while (lx.eat_symbol(";")) c = cmd_seq(c, parse_cmd_single(lx));
    return c;
}

CmdPtr parse_cmd_single(Lexer& lx) {
    if (lx.eat_keyword("skip")) return cmd_skip();
    if (lx.eat_keyword("abort")) return cmd_abort();
    if (lx.eat_keyword("if")) {
        PredPtr guard = parse_pred_or(lx);
        lx.expect_keyword("then");
        CmdPtr then_branch = parse_cmd_seq(lx);
        lx.expect_keyword("else");
        CmdPtr else_branch = parse_cmd_seq(lx);
        lx.expect_keyword("end");
        return cmd_if(guard, then_branch, else_branch);
    }
    if (lx.eat_keyword("while")) {
        PredPtr guard = parse_pred_or(lx);
        lx.expect_keyword("do");
        CmdPtr body = parse_cmd_seq(lx);
        lx.expect_keyword("end");
        return cmd_while(guard, body);
    }
    std::string x = lx.expect_ident("a command");
    if (is_keyword(x)) throw SyntaxError("unexpected keyword '" + x + "'", lx.pos - x.size());
    lx.expect_symbol(":=");
    return cmd_assign(x, parse_expr_impl(lx));
}

}  // namespace

ExprPtr parse_expr(const std::string& text) {
    Lexer lx{text};
    ExprPtr e = parse_expr_impl(lx);
    if (!lx.at_end()) throw SyntaxError("unexpected trailing input", lx.pos);
    return e;
}

PredPtr parse_pred(const std::string& text) {
    Lexer lx{text};
    PredPtr p = parse_pred_or(lx);
    if (!lx.at_end()) throw SyntaxError("unexpected trailing input", lx.pos);
    return p;
}

CmdPtr parse_program(const std::string& text) {
    Lexer lx{text};
    CmdPtr c = parse_cmd_seq(lx);
    if (!lx.at_end()) throw SyntaxError("unexpected trailing input", lx.pos);
    return c;
}

Context parse_context(const std::string& text) {
    Lexer lx{text};
    Context ctx;
    if (lx.at_end()) return ctx;
    for (;;) {
        std::string x = lx.expect_ident("a variable");
        lx.expect_symbol(":");
        std::string a = lx.expect_ident("a sort");
        ctx.push(x, a);
        if (!lx.eat_symbol(",")) break;
    }
    if (!lx.at_end()) throw SyntaxError("unexpected trailing input", lx.pos);
    return ctx;
}

Signature ProgramSignature::to_signature() const {
    Signature sig;
    for (const Sort& a : sorts) sig.add_sort(a);
    for (const auto& [f, ty] : functions) sig.add_symbol(f, ty.first, Monomial{ty.second});
    for (const auto& [r, ar] : predicates) {
        sig.add_symbol(r, ar, Monomial::unit());
        sig.add_symbol(complement_name(r), ar, Monomial::unit());
    }
    return sig;
}

Theory ProgramSignature::axioms() const {
    Signature sig = to_signature();
    Theory theory;
    theory.signature = sig;
    for (const auto& [f, ty] : functions) {
        TapePtr gen = tape_embed(circ_gen(sig, f));
        Monomial u = ty.first;
        Monomial a{ty.second};
        // single valued: f^ ; f <= id_A, total: id_U <= f ; f^
        theory.axioms.push_back({tape_seq(derived_converse(gen), gen), tape_id(a), false});
        theory.axioms.push_back({tape_id(u), tape_seq(gen, derived_converse(gen)), false});
    }
    for (const auto& [r, ar] : predicates) {
        TapePtr pr = tape_embed(circ_gen(sig, r));
        TapePtr nr = tape_embed(circ_gen(sig, complement_name(r)));
        Polynomial pu = Polynomial::of(ar);
        // excluded middle and no contradiction
        theory.axioms.push_back({derived_join(pr, nr), derived_top(pu, Polynomial::unit()), true});
        theory.axioms.push_back({derived_meet(pr, nr), derived_bot(pu, Polynomial::unit()), true});
    }
    return theory;
}

Sort typecheck_expr(const Context& ctx, const ExprPtr& e, const ProgramSignature& sig) {
    if (e->kind == Expr::Kind::Var) {
        auto i = ctx.find(e->var);
        if (!i) throw UnboundVariable("variable '" + e->var + "' not in context");
        return ctx.vars[*i].second;
    }
    auto it = sig.functions.find(e->fn);
    if (it == sig.functions.end()) throw UnknownSymbol("function '" + e->fn + "' not declared");
    const auto& [arity, coarity] = it->second;
    if (arity.factors.size() != e->args.size())
        throw ArityMismatch("function '" + e->fn + "' expects " + std::to_string(arity.factors.size()) +
                            " arguments, got " + std::to_string(e->args.size()));
    for (std::size_t i = 0; i < e->args.size(); ++i) {
        Sort got = typecheck_expr(ctx, e->args[i], sig);
        if (got != arity.factors[i])
            throw SortMismatch("argument " + std::to_string(i) + " of '" + e->fn + "' has sort " + got +
                               ", expected " + arity.factors[i]);
    }
    return coarity;
}

namespace {

void typecheck_atom_args(const Context& ctx, const std::string& r, const std::vector<ExprPtr>& args,
                         const ProgramSignature& sig) {
    auto it = sig.predicates.find(r);
    if (it == sig.predicates.end()) throw UnknownSymbol("predicate '" + r + "' not declared");
    const Monomial& arity = it->second;
    if (arity.factors.size() != args.size())
        throw ArityMismatch("predicate '" + r + "' expects " + std::to_string(arity.factors.size()) +
                            " arguments, got " + std::to_string(args.size()));
    for (std::size_t i = 0; i < args.size(); ++i) {
        Sort got = typecheck_expr(ctx, args[i], sig);
        if (got != arity.factors[i])
            throw SortMismatch("argument " + std::to_string(i) + " of '" + r + "' has sort " + got + ", expected " +
                               arity.factors[i]);
    }
}

}  // namespace

void typecheck_pred(const Context& ctx, const PredPtr& p, const ProgramSignature& sig) {
    switch (p->kind) {
        case Pred::Kind::Atom:
        case Pred::Kind::NAtom:
            typecheck_atom_args(ctx, p->pred, p->args, sig);
            return;
        case Pred::Kind::Top:
        case Pred::Kind::Bot:
            return;
        case Pred::Kind::And:
        case Pred::Kind::Or:
            typecheck_pred(ctx, p->lhs, sig);
            typecheck_pred(ctx, p->rhs, sig);
            return;
    }
    throw Error("unreachable");
}

void typecheck_cmd(const Context& ctx, const CmdPtr& c, const ProgramSignature& sig) {
    switch (c->kind) {
        case Cmd::Kind::Abort:
        case Cmd::Kind::Skip:
            return;
        case Cmd::Kind::If:
            typecheck_pred(ctx, c->guard, sig);
            typecheck_cmd(ctx, c->c1, sig);
            typecheck_cmd(ctx, c->c2, sig);
            return;
        case Cmd::Kind::While:
            typecheck_pred(ctx, c->guard, sig);
            typecheck_cmd(ctx, c->c1, sig);
            return;
        case Cmd::Kind::Seq:
            typecheck_cmd(ctx, c->c1, sig);
            typecheck_cmd(ctx, c->c2, sig);
            return;
        case Cmd::Kind::Assign: {
            auto i = ctx.find(c->var);
            if (!i) throw UnboundVariable("variable '" + c->var + "' not in context");
            Sort a = ctx.vars[*i].second;
            Sort got = typecheck_expr(ctx, c->expr, sig);
            if (got != a) throw SortMismatch("assignment to '" + c->var + "': sort " + got + ", expected " + a);
            return;
        }
    }
    throw Error("unreachable");
}

PredPtr negate(const PredPtr& p) {
    switch (p->kind) {
        case Pred::Kind::Atom:
            return pred_natom(p->pred, p->args);
        case Pred::Kind::NAtom:
            return pred_atom(p->pred, p->args);
        case Pred::Kind::Top:
            return pred_bot();
        case Pred::Kind::Bot:
            return pred_top();
        case Pred::Kind::And:
            return pred_or(negate(p->lhs), negate(p->rhs));
        case Pred::Kind::Or:
            return pred_and(negate(p->lhs), negate(p->rhs));
    }
    throw Error("unreachable");
}

ExprPtr substitute(const Context& ctx, const ProgramSignature& sig, const ExprPtr& e, const ExprPtr& t,
                   const std::string& x) {
    auto i = ctx.find(x);
    if (!i) throw UnboundVariable("variable '" + x + "' not in context");
    Sort expected = ctx.vars[*i].second;
    Sort got = typecheck_expr(ctx, t, sig);
    if (got != expected)
        throw SortMismatch("substitution for '" + x + "': sort " + got + ", expected " + expected);
    struct Walk {
        const ExprPtr& t;
        const std::string& x;
        ExprPtr go(const ExprPtr& e) const {
            if (e->kind == Expr::Kind::Var) return e->var == x ? t : e;
            std::vector<ExprPtr> args;
            args.reserve(e->args.size());
            for (const ExprPtr& a : e->args) args.push_back(go(a));
            return expr_app(e->fn, std::move(args));
        }
    };
    return Walk{t, x}.go(e);
}

PredPtr substitute(const Context& ctx, const ProgramSignature& sig, const PredPtr& p, const ExprPtr& t,
                   const std::string& x) {
    switch (p->kind) {
        case Pred::Kind::Atom:
        case Pred::Kind::NAtom: {
            std::vector<ExprPtr> args;
            args.reserve(p->args.size());
            for (const ExprPtr& a : p->args) args.push_back(substitute(ctx, sig, a, t, x));
            return p->kind == Pred::Kind::Atom ? pred_atom(p->pred, std::move(args))
                                               : pred_natom(p->pred, std::move(args));
        }
        case Pred::Kind::Top:
        case Pred::Kind::Bot:
            return p;
        case Pred::Kind::And:
            return pred_and(substitute(ctx, sig, p->lhs, t, x), substitute(ctx, sig, p->rhs, t, x));
        case Pred::Kind::Or:
            return pred_or(substitute(ctx, sig, p->lhs, t, x), substitute(ctx, sig, p->rhs, t, x));
    }
    throw Error("unreachable");
}

namespace {

// (discard Gamma') * id_A * (discard Delta') for the variable slot.
CircuitPtr var_projection(const Context& ctx, std::size_t slot) {
    CircuitPtr acc = nullptr;
    auto add = [&](CircuitPtr piece) { acc = acc ? circ_tensor(std::move(acc), std::move(piece)) : std::move(piece); };
    for (std::size_t i = 0; i < ctx.vars.size(); ++i) {
        if (i == slot)
            add(circ_id(ctx.vars[i].second));
        else
            add(circ_discharger(ctx.vars[i].second));
    }
    return acc ? acc : circ_id_unit();
}

CircuitPtr encode_args(const Context& ctx, const std::vector<ExprPtr>& args, const ProgramSignature& sig) {
    Monomial u = ctx.word();
    if (args.empty()) return circ_copier_n(u, 0);
    CircuitPtr spread = nullptr;
    for (const ExprPtr& a : args) {
        CircuitPtr enc = encode_expr(ctx, a, sig);
        spread = spread ? circ_tensor(std::move(spread), std::move(enc)) : std::move(enc);
    }
    return circ_seq(circ_copier_n(u, static_cast<int>(args.size())), std::move(spread));
}

}  // namespace

CircuitPtr encode_expr(const Context& ctx, const ExprPtr& e, const ProgramSignature& sig) {
    if (e->kind == Expr::Kind::Var) {
        auto i = ctx.find(e->var);
        if (!i) throw UnboundVariable("variable '" + e->var + "' not in context");
        return var_projection(ctx, *i);
    }
    Signature full = sig.to_signature();
    return circ_seq(encode_args(ctx, e->args, sig), circ_gen(full, e->fn));
}

TapePtr encode_pred(const Context& ctx, const PredPtr& p, const ProgramSignature& sig) {
    Monomial u = ctx.word();
    switch (p->kind) {
        case Pred::Kind::Atom:
        case Pred::Kind::NAtom: {
            Signature full = sig.to_signature();
            std::string name = p->kind == Pred::Kind::Atom ? p->pred : ProgramSignature::complement_name(p->pred);
            return tape_embed(circ_seq(encode_args(ctx, p->args, sig), circ_gen(full, name)));
        }
        case Pred::Kind::Top:
            return tape_embed(circ_discharger_word(u));
        case Pred::Kind::Bot:
            return tape_seq(tape_bang(u), tape_cobang(Monomial::unit()));
        case Pred::Kind::And: {
            TapePtr l = encode_pred(ctx, p->lhs, sig);
            TapePtr r = encode_pred(ctx, p->rhs, sig);
            return tape_seq(tape_embed(circ_copier_word(u)), tensor_tapes(l, r));
        }
        case Pred::Kind::Or: {
            TapePtr l = encode_pred(ctx, p->lhs, sig);
            TapePtr r = encode_pred(ctx, p->rhs, sig);
            return tape_seq_all({tape_diag(u), tape_sum(l, r), tape_codiag(Monomial::unit())});
        }
    }
    throw Error("unreachable");
}

TapePtr coreflexive(const TapePtr& pred_tape) {
    if (pred_tape->dom.branches() != 1 || pred_tape->cod != Polynomial::unit())
        throw TypeMismatch("coreflexive expects a predicate tape U -> 1");
    Monomial u = pred_tape->dom.summands.front();
    return tape_seq(tape_embed(circ_copier_word(u)), tensor_tapes(tape_id(u), pred_tape));
}

TapePtr image(const TapePtr& coreflexive_tape, const Interpretation* check) {
    if (coreflexive_tape->dom != coreflexive_tape->cod || coreflexive_tape->dom.branches() != 1)
        throw TypeMismatch("image expects an endo tape on a monomial");
    if (check != nullptr) {
        FinRel r = eval(coreflexive_tape, *check);
        if (!arrow_property(r, ArrowProperty::COR)) throw NotCoreflexive("argument does not evaluate below the identity");
    }
    Monomial u = coreflexive_tape->dom.summands.front();
    return tape_seq(coreflexive_tape, tape_embed(circ_discharger_word(u)));
}

TapePtr encode_cmd(const Context& ctx, const CmdPtr& c, const ProgramSignature& sig) {
    Monomial u = ctx.word();
    switch (c->kind) {
        case Cmd::Kind::Abort:
            return tape_seq(tape_bang(u), tape_cobang(u));
        case Cmd::Kind::Skip:
            return tape_id(u);
        case Cmd::Kind::Seq:
            return tape_seq(encode_cmd(ctx, c->c1, sig), encode_cmd(ctx, c->c2, sig));
        case Cmd::Kind::If: {
            TapePtr then_arm = tape_seq(coreflexive(encode_pred(ctx, c->guard, sig)), encode_cmd(ctx, c->c1, sig));
            TapePtr else_arm =
                tape_seq(coreflexive(encode_pred(ctx, negate(c->guard), sig)), encode_cmd(ctx, c->c2, sig));
            return derived_join(then_arm, else_arm);
        }
        case Cmd::Kind::While: {
            TapePtr body = tape_seq(coreflexive(encode_pred(ctx, c->guard, sig)), encode_cmd(ctx, c->c1, sig));
            return tape_seq(derived_star(body), coreflexive(encode_pred(ctx, negate(c->guard), sig)));
        }
        case Cmd::Kind::Assign: {
            auto slot = ctx.find(c->var);
            if (!slot) throw UnboundVariable("variable '" + c->var + "' not in context");
            Monomial before, after;
            for (std::size_t i = 0; i < *slot; ++i) before.factors.push_back(ctx.vars[i].second);
            for (std::size_t i = *slot + 1; i < ctx.vars.size(); ++i) after.factors.push_back(ctx.vars[i].second);
            Sort a = ctx.vars[*slot].second;
            CircuitPtr spread = circ_tensor(circ_tensor(circ_copier_word(before), circ_id(a)),
                                            circ_copier_word(after));
            CircuitPtr apply = circ_tensor(circ_tensor(circ_id_word(before), encode_expr(ctx, c->expr, sig)),
                                           circ_id_word(after));
            return tape_embed(circ_seq(std::move(spread), std::move(apply)));
        }
    }
    throw Error("unreachable");
}

Interpretation restrict_interpretation(const ProgramSignature& sig, const Interpretation& interp) {
    Interpretation out = interp;
    out.signature = sig.to_signature();
    for (const auto& [r, ar] : sig.predicates) {
        std::string cname = ProgramSignature::complement_name(r);
        if (out.relations.count(cname)) continue;
        const FinRel& base = out.relation(r);
        FinRel comp(base.dom(), base.cod());
        for (int x = 0; x < base.dom().size(); ++x)
            if (!base.contains(x, 0)) comp.insert(x, 0);
        out.relations.emplace(cname, std::move(comp));
    }
    CheckReport rep = check_theory(sig.axioms(), out);
    if (!rep.holds)
        throw NotAModel("interpretation violates the program-signature axioms (" + rep.detail + ")");
    return out;
}

}  // namespace tapes
