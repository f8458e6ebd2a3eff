#include "tapes/cr.hpp"

#include <cctype>

#include "tapes/sugar.hpp"

namespace tapes {

namespace {

CRPtr node(CRExpr e) { return std::make_shared<const CRExpr>(std::move(e)); }

}  // namespace

CRPtr cr_symbol(std::string name) { return node({CRExpr::Kind::Symbol, std::move(name), nullptr, nullptr}); }
CRPtr cr_id() { return node({CRExpr::Kind::Id, {}, nullptr, nullptr}); }
CRPtr cr_top() { return node({CRExpr::Kind::Top, {}, nullptr, nullptr}); }
CRPtr cr_bot() { return node({CRExpr::Kind::Bot, {}, nullptr, nullptr}); }
CRPtr cr_seq(CRPtr a, CRPtr b) { return node({CRExpr::Kind::Seq, {}, std::move(a), std::move(b)}); }
CRPtr cr_meet(CRPtr a, CRPtr b) { return node({CRExpr::Kind::Meet, {}, std::move(a), std::move(b)}); }
CRPtr cr_join(CRPtr a, CRPtr b) { return node({CRExpr::Kind::Join, {}, std::move(a), std::move(b)}); }
CRPtr cr_converse(CRPtr a) { return node({CRExpr::Kind::Converse, {}, std::move(a), nullptr}); }
CRPtr cr_star(CRPtr a) { return node({CRExpr::Kind::Star, {}, std::move(a), nullptr}); }

namespace {

struct CRParser {
    const std::string& text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    CRPtr atom() {
        skip_ws();
        if (pos >= text.size()) throw SyntaxError("expected an expression", pos);
        if (eat('(')) {
            CRPtr e = join();
            if (!eat(')')) throw SyntaxError("missing ')'", pos);
            return e;
        }
        if (!std::isalpha(static_cast<unsigned char>(text[pos])) && text[pos] != '_')
            throw SyntaxError("expected an identifier", pos);
        std::size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_' || text[pos] == '\''))
            ++pos;
        std::string name = text.substr(start, pos - start);
        if (name == "id") return cr_id();
        if (name == "top") return cr_top();
        if (name == "bot") return cr_bot();
        return cr_symbol(name);
    }

    CRPtr postfix() {
        CRPtr e = atom();
        for (;;) {
            if (eat('^'))
                e = cr_converse(e);
            else if (eat('*'))
                e = cr_star(e);
            else
                return e;
        }
    }

    CRPtr seq() {
        CRPtr e = postfix();
        while (eat(';')) e = cr_seq(e, postfix());
        return e;
    }

    CRPtr meet() {
        CRPtr e = seq();
        while (eat('&')) e = cr_meet(e, seq());
        return e;
    }

    CRPtr join() {
        CRPtr e = meet();
        while (eat('|')) e = cr_join(e, meet());
        return e;
    }

    CRPtr parse() {
        CRPtr e = join();
        skip_ws();
        if (pos != text.size()) throw SyntaxError("unexpected trailing input", pos);
        return e;
    }
};

void collect(const CRPtr& e, std::set<std::string>& out) {
    if (!e) return;
    if (e->kind == CRExpr::Kind::Symbol) out.insert(e->symbol);
    collect(e->lhs, out);
    collect(e->rhs, out);
}

}  // namespace

CRPtr parse_cr(const std::string& text) {
    CRParser p{text};
    return p.parse();
}

std::string to_string(const CRPtr& e) {
    switch (e->kind) {
        case CRExpr::Kind::Symbol:
            return e->symbol;
        case CRExpr::Kind::Id:
            return "id";
        case CRExpr::Kind::Top:
            return "top";
        case CRExpr::Kind::Bot:
            return "bot";
        case CRExpr::Kind::Seq:
            return "(" + to_string(e->lhs) + ";" + to_string(e->rhs) + ")";
        case CRExpr::Kind::Meet:
            return "(" + to_string(e->lhs) + " & " + to_string(e->rhs) + ")";
        case CRExpr::Kind::Join:
            return "(" + to_string(e->lhs) + " | " + to_string(e->rhs) + ")";
        case CRExpr::Kind::Converse:
            return to_string(e->lhs) + "^";
        case CRExpr::Kind::Star:
            return to_string(e->lhs) + "*";
    }
    throw Error("unreachable");
}

std::set<std::string> cr_symbols(const CRPtr& e) {
    std::set<std::string> out;
    collect(e, out);
    return out;
}

const Sort kCRSort = "A";

Carrier CRInterp::carrier_of(int n) { return Carrier(Polynomial::of_sort(kCRSort), {{kCRSort, n}}); }

FinRel eval_cr(const CRPtr& e, const CRInterp& interp) {
    Carrier x = interp.carrier();
    switch (e->kind) {
        case CRExpr::Kind::Symbol: {
            auto it = interp.rho.find(e->symbol);
            if (it == interp.rho.end()) throw UnknownSymbol("symbol '" + e->symbol + "' not interpreted");
            return it->second;
        }
        case CRExpr::Kind::Id:
            return FinRel::identity(x);
        case CRExpr::Kind::Top:
            return FinRel::full(x, x);
        case CRExpr::Kind::Bot:
            return FinRel::empty(x, x);
        case CRExpr::Kind::Seq:
            return compose(eval_cr(e->lhs, interp), eval_cr(e->rhs, interp));
        case CRExpr::Kind::Meet:
            return eval_cr(e->lhs, interp).meet(eval_cr(e->rhs, interp));
        case CRExpr::Kind::Join:
            return eval_cr(e->lhs, interp).join(eval_cr(e->rhs, interp));
        case CRExpr::Kind::Converse:
            return eval_cr(e->lhs, interp).converse();
        case CRExpr::Kind::Star:
            return star(eval_cr(e->lhs, interp));
    }
    throw Error("unreachable");
}

Signature cr_signature(const std::set<std::string>& symbols) {
    Signature sig;
    sig.add_sort(kCRSort);
    for (const std::string& r : symbols) sig.add_symbol(r, Monomial{kCRSort}, Monomial{kCRSort});
    return sig;
}

TapePtr encode_cr(const CRPtr& e, const Signature& sig) {
    Monomial a{kCRSort};
    Polynomial pa = Polynomial::of(a);
    switch (e->kind) {
        case CRExpr::Kind::Symbol:
            return tape_embed(circ_gen(sig, e->symbol));
        case CRExpr::Kind::Id:
            return tape_id(a);
        case CRExpr::Kind::Top:
            return derived_top(pa, pa);
        case CRExpr::Kind::Bot:
            return derived_bot(pa, pa);
        case CRExpr::Kind::Seq:
            return tape_seq(encode_cr(e->lhs, sig), encode_cr(e->rhs, sig));
        case CRExpr::Kind::Meet:
            return derived_meet(encode_cr(e->lhs, sig), encode_cr(e->rhs, sig));
        case CRExpr::Kind::Join:
            return derived_join(encode_cr(e->lhs, sig), encode_cr(e->rhs, sig));
        case CRExpr::Kind::Converse:
            return derived_converse(encode_cr(e->lhs, sig));
        case CRExpr::Kind::Star:
            return derived_star(encode_cr(e->lhs, sig));
    }
    throw Error("unreachable");
}

Interpretation cr_to_interpretation(const CRInterp& interp, const Signature& sig) {
    Interpretation out;
    out.signature = sig;
    out.sizes = {{kCRSort, interp.size}};
    for (const auto& [name, rel] : interp.rho) {
        if (sig.has_symbol(name)) out.set_relation(name, rel);
    }
    return out;
}

}  // namespace tapes
