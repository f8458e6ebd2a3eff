#include "tapes/sexpr.hpp"

#include <cctype>
#include <vector>

namespace tapes {

namespace {

std::string dump_mono(const Monomial& u) {
    std::string s = "(m";
    for (const Sort& a : u.factors) s += " " + a;
    return s + ")";
}

struct SexprNode {
    std::string atom;  // nonempty for atoms
    std::vector<SexprNode> items;
    std::size_t pos = 0;
    bool is_atom() const { return !atom.empty(); }
};

struct SexprParser {
    const std::string& text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    SexprNode parse() {
        skip_ws();
        if (pos >= text.size()) throw SyntaxError("unexpected end of input", pos);
        SexprNode n;
        n.pos = pos;
        if (text[pos] == '(') {
            ++pos;
            skip_ws();
            while (pos < text.size() && text[pos] != ')') {
                n.items.push_back(parse());
                skip_ws();
            }
            if (pos >= text.size()) throw SyntaxError("missing ')'", pos);
            ++pos;
            return n;
        }
        if (text[pos] == ')') throw SyntaxError("unexpected ')'", pos);
        std::size_t start = pos;
        while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])) && text[pos] != '(' &&
               text[pos] != ')')
            ++pos;
        n.atom = text.substr(start, pos - start);
        return n;
    }

    SexprNode parse_all() {
        SexprNode n = parse();
        skip_ws();
        if (pos != text.size()) throw SyntaxError("trailing input after term", pos);
        return n;
    }
};

const SexprNode& arg(const SexprNode& n, std::size_t i) {
    if (i >= n.items.size()) throw SyntaxError("missing argument", n.pos);
    return n.items[i];
}

std::string head(const SexprNode& n) {
    if (n.is_atom()) return n.atom;
    if (n.items.empty() || !n.items[0].is_atom()) throw SyntaxError("expected an operator", n.pos);
    return n.items[0].atom;
}

void expect_arity(const SexprNode& n, std::size_t k) {
    if (!n.is_atom() && n.items.size() != k + 1) throw SyntaxError("wrong number of arguments to '" + head(n) + "'", n.pos);
}

std::string atom_arg(const SexprNode& n, std::size_t i) {
    const SexprNode& a = arg(n, i);
    if (!a.is_atom()) throw SyntaxError("expected an identifier", a.pos);
    return a.atom;
}

Monomial parse_mono(const SexprNode& n) {
    if (n.is_atom() || n.items.empty() || head(n) != "m") throw SyntaxError("expected a monomial (m ...)", n.pos);
    Monomial u;
    for (std::size_t i = 1; i < n.items.size(); ++i) {
        if (!n.items[i].is_atom()) throw SyntaxError("expected a sort name", n.items[i].pos);
        u.factors.push_back(n.items[i].atom);
    }
    return u;
}

CircuitPtr build_circuit(const SexprNode& n, const Signature& sig) {
    std::string h = head(n);
    if (n.is_atom()) {
        if (h == "cunit") return circ_id_unit();
        throw SyntaxError("unknown circuit atom '" + h + "'", n.pos);
    }
    if (h == "cid") {
        expect_arity(n, 1);
        return circ_id(atom_arg(n, 1));
    }
    if (h == "gen") {
        expect_arity(n, 1);
        return circ_gen(sig, atom_arg(n, 1));
    }
    if (h == "cswap") {
        expect_arity(n, 2);
        return circ_symmetry(atom_arg(n, 1), atom_arg(n, 2));
    }
    if (h == "cseq") {
        expect_arity(n, 2);
        return circ_seq(build_circuit(arg(n, 1), sig), build_circuit(arg(n, 2), sig));
    }
    if (h == "cten") {
        expect_arity(n, 2);
        return circ_tensor(build_circuit(arg(n, 1), sig), build_circuit(arg(n, 2), sig));
    }
    if (h == "discard") {
        expect_arity(n, 1);
        return circ_discharger(atom_arg(n, 1));
    }
    if (h == "copy") {
        expect_arity(n, 1);
        return circ_copier(atom_arg(n, 1));
    }
    if (h == "codiscard") {
        expect_arity(n, 1);
        return circ_codischarger(atom_arg(n, 1));
    }
    if (h == "cocopy") {
        expect_arity(n, 1);
        return circ_cocopier(atom_arg(n, 1));
    }
    throw SyntaxError("unknown circuit operator '" + h + "'", n.pos);
}

TapePtr build_tape(const SexprNode& n, const Signature& sig) {
    std::string h = head(n);
    if (n.is_atom()) {
        if (h == "zero") return tape_id_zero();
        throw SyntaxError("unknown tape atom '" + h + "'", n.pos);
    }
    if (h == "id") {
        expect_arity(n, 1);
        return tape_id(parse_mono(arg(n, 1)));
    }
    if (h == "tape") {
        expect_arity(n, 1);
        return tape_embed(build_circuit(arg(n, 1), sig));
    }
    if (h == "swap") {
        expect_arity(n, 2);
        return tape_symmetry_plus(parse_mono(arg(n, 1)), parse_mono(arg(n, 2)));
    }
    if (h == "seq") {
        expect_arity(n, 2);
        return tape_seq(build_tape(arg(n, 1), sig), build_tape(arg(n, 2), sig));
    }
    if (h == "sum") {
        expect_arity(n, 2);
        return tape_sum(build_tape(arg(n, 1), sig), build_tape(arg(n, 2), sig));
    }
    if (h == "bang") {
        expect_arity(n, 1);
        return tape_bang(parse_mono(arg(n, 1)));
    }
    if (h == "diag") {
        expect_arity(n, 1);
        return tape_diag(parse_mono(arg(n, 1)));
    }
    if (h == "cobang") {
        expect_arity(n, 1);
        return tape_cobang(parse_mono(arg(n, 1)));
    }
    if (h == "codiag") {
        expect_arity(n, 1);
        return tape_codiag(parse_mono(arg(n, 1)));
    }
    if (h == "tr") {
        expect_arity(n, 2);
        return tape_trace(parse_mono(arg(n, 1)), build_tape(arg(n, 2), sig));
    }
    throw SyntaxError("unknown tape operator '" + h + "'", n.pos);
}

}  // namespace

std::string dump_sexpr(const CircuitPtr& c) {
    switch (c->kind) {
        case Circuit::Kind::IdSort:
            return "(cid " + c->sort_a + ")";
        case Circuit::Kind::IdUnit:
            return "cunit";
        case Circuit::Kind::Generator:
            return "(gen " + c->generator_name + ")";
        case Circuit::Kind::Symmetry:
            return "(cswap " + c->sort_a + " " + c->sort_b + ")";
        case Circuit::Kind::Seq:
            return "(cseq " + dump_sexpr(c->lhs) + " " + dump_sexpr(c->rhs) + ")";
        case Circuit::Kind::Tensor:
            return "(cten " + dump_sexpr(c->lhs) + " " + dump_sexpr(c->rhs) + ")";
        case Circuit::Kind::Discharger:
            return "(discard " + c->sort_a + ")";
        case Circuit::Kind::Copier:
            return "(copy " + c->sort_a + ")";
        case Circuit::Kind::Codischarger:
            return "(codiscard " + c->sort_a + ")";
        case Circuit::Kind::Cocopier:
            return "(cocopy " + c->sort_a + ")";
    }
    throw Error("unreachable");
}

std::string dump_sexpr(const TapePtr& t) {
    switch (t->kind) {
        case Tape::Kind::IdMonomial:
            return "(id " + dump_mono(t->u) + ")";
        case Tape::Kind::IdZero:
            return "zero";
        case Tape::Kind::Embed:
            return "(tape " + dump_sexpr(t->circuit) + ")";
        case Tape::Kind::SymmetryPlus:
            return "(swap " + dump_mono(t->u) + " " + dump_mono(t->v) + ")";
        case Tape::Kind::Seq:
            return "(seq " + dump_sexpr(t->lhs) + " " + dump_sexpr(t->rhs) + ")";
        case Tape::Kind::Sum:
            return "(sum " + dump_sexpr(t->lhs) + " " + dump_sexpr(t->rhs) + ")";
        case Tape::Kind::Bang:
            return "(bang " + dump_mono(t->u) + ")";
        case Tape::Kind::Diag:
            return "(diag " + dump_mono(t->u) + ")";
        case Tape::Kind::Cobang:
            return "(cobang " + dump_mono(t->u) + ")";
        case Tape::Kind::Codiag:
            return "(codiag " + dump_mono(t->u) + ")";
        case Tape::Kind::Trace:
            return "(tr " + dump_mono(t->u) + " " + dump_sexpr(t->lhs) + ")";
    }
    throw Error("unreachable");
}

CircuitPtr parse_circuit_sexpr(const std::string& text, const Signature& sig) {
    SexprParser p{text};
    return build_circuit(p.parse_all(), sig);
}

TapePtr parse_tape_sexpr(const std::string& text, const Signature& sig) {
    SexprParser p{text};
    return build_tape(p.parse_all(), sig);
}

}  // namespace tapes
