#include "tapes/term.hpp"

#include <vector>

namespace tapes {

namespace {

CircuitPtr make_circ(Circuit c) { return std::make_shared<const Circuit>(std::move(c)); }
TapePtr make_tape(Tape t) { return std::make_shared<const Tape>(std::move(t)); }

}  // namespace

CircuitPtr circ_id(const Sort& a) {
    Circuit c{};
    c.kind = Circuit::Kind::IdSort;
    c.sort_a = a;
    c.dom = c.cod = Monomial{a};
    return make_circ(std::move(c));
}

CircuitPtr circ_id_unit() {
    Circuit c{};
    c.kind = Circuit::Kind::IdUnit;
    c.dom = c.cod = Monomial::unit();
    return make_circ(std::move(c));
}

CircuitPtr circ_gen(const Signature& sig, const std::string& name) {
    const auto& [ar, coar] = sig.arity_of(name);
    Circuit c{};
    c.kind = Circuit::Kind::Generator;
    c.generator_name = name;
    c.gen_arity = ar;
    c.gen_coarity = coar;
    c.dom = ar;
    c.cod = coar;
    return make_circ(std::move(c));
}

CircuitPtr circ_symmetry(const Sort& a, const Sort& b) {
    Circuit c{};
    c.kind = Circuit::Kind::Symmetry;
    c.sort_a = a;
    c.sort_b = b;
    c.dom = Monomial{a, b};
    c.cod = Monomial{b, a};
    return make_circ(std::move(c));
}

CircuitPtr circ_seq(CircuitPtr c, CircuitPtr d) {
    if (c->cod != d->dom)
        throw CompositionMismatch("circuit composition: " + to_string(c->cod) + " vs " + to_string(d->dom));
    Circuit r{};
    r.kind = Circuit::Kind::Seq;
    r.dom = c->dom;
    r.cod = d->cod;
    r.lhs = std::move(c);
    r.rhs = std::move(d);
    return make_circ(std::move(r));
}

CircuitPtr circ_tensor(CircuitPtr c, CircuitPtr d) {
    Circuit r{};
    r.kind = Circuit::Kind::Tensor;
    r.dom = concat(c->dom, d->dom);
    r.cod = concat(c->cod, d->cod);
    r.lhs = std::move(c);
    r.rhs = std::move(d);
    return make_circ(std::move(r));
}

static CircuitPtr circ_sort_structural(Circuit::Kind kind, const Sort& a, Monomial dom, Monomial cod) {
    Circuit c{};
    c.kind = kind;
    c.sort_a = a;
    c.dom = std::move(dom);
    c.cod = std::move(cod);
    return make_circ(std::move(c));
}

CircuitPtr circ_discharger(const Sort& a) {
    return circ_sort_structural(Circuit::Kind::Discharger, a, Monomial{a}, Monomial::unit());
}
CircuitPtr circ_copier(const Sort& a) {
    return circ_sort_structural(Circuit::Kind::Copier, a, Monomial{a}, Monomial{a, a});
}
CircuitPtr circ_codischarger(const Sort& a) {
    return circ_sort_structural(Circuit::Kind::Codischarger, a, Monomial::unit(), Monomial{a});
}
CircuitPtr circ_cocopier(const Sort& a) {
    return circ_sort_structural(Circuit::Kind::Cocopier, a, Monomial{a, a}, Monomial{a});
}

CircuitPtr circ_id_word(const Monomial& u) {
    if (u.is_unit()) return circ_id_unit();
    CircuitPtr acc = circ_id(u.factors[0]);
    for (std::size_t i = 1; i < u.factors.size(); ++i) acc = circ_tensor(acc, circ_id(u.factors[i]));
    return acc;
}

// sigma_{A,V} : AV -> VA by walking A past every factor of V
static CircuitPtr circ_symmetry_sort_word(const Sort& a, const Monomial& v) {
    if (v.is_unit()) return circ_id(a);
    Monomial rest(std::vector<Sort>(v.factors.begin() + 1, v.factors.end()));
    CircuitPtr head = circ_tensor(circ_symmetry(a, v.factors[0]), circ_id_word(rest));
    CircuitPtr tail = circ_tensor(circ_id(v.factors[0]), circ_symmetry_sort_word(a, rest));
    return circ_seq(head, tail);
}

CircuitPtr circ_symmetry_word(const Monomial& u, const Monomial& v) {
    if (u.is_unit()) return circ_id_word(v);
    Monomial rest(std::vector<Sort>(u.factors.begin() + 1, u.factors.end()));
    // move the head sort past V after the tail has crossed
    CircuitPtr first = circ_tensor(circ_id(u.factors[0]), circ_symmetry_word(rest, v));
    CircuitPtr second = circ_tensor(circ_symmetry_sort_word(u.factors[0], v), circ_id_word(rest));
    return circ_seq(first, second);
}

CircuitPtr circ_copier_word(const Monomial& u) {
    if (u.is_unit()) return circ_id_unit();
    Sort a = u.factors[0];
    Monomial rest(std::vector<Sort>(u.factors.begin() + 1, u.factors.end()));
    if (rest.is_unit()) return circ_copier(a);
    CircuitPtr both = circ_tensor(circ_copier(a), circ_copier_word(rest));
    CircuitPtr fix = circ_tensor(circ_tensor(circ_id(a), circ_symmetry_sort_word(a, rest)), circ_id_word(rest));
    return circ_seq(both, fix);
}

CircuitPtr circ_discharger_word(const Monomial& u) {
    if (u.is_unit()) return circ_id_unit();
    CircuitPtr acc = circ_discharger(u.factors[0]);
    for (std::size_t i = 1; i < u.factors.size(); ++i) acc = circ_tensor(acc, circ_discharger(u.factors[i]));
    return acc;
}

CircuitPtr circ_cocopier_word(const Monomial& u) {
    if (u.is_unit()) return circ_id_unit();
    Sort a = u.factors[0];
    Monomial rest(std::vector<Sort>(u.factors.begin() + 1, u.factors.end()));
    if (rest.is_unit()) return circ_cocopier(a);
    CircuitPtr fix = circ_tensor(circ_tensor(circ_id(a), circ_symmetry_word(rest, Monomial{a})), circ_id_word(rest));
    CircuitPtr both = circ_tensor(circ_cocopier(a), circ_cocopier_word(rest));
    return circ_seq(fix, both);
}

CircuitPtr circ_codischarger_word(const Monomial& u) {
    if (u.is_unit()) return circ_id_unit();
    CircuitPtr acc = circ_codischarger(u.factors[0]);
    for (std::size_t i = 1; i < u.factors.size(); ++i) acc = circ_tensor(acc, circ_codischarger(u.factors[i]));
    return acc;
}

CircuitPtr circ_copier_n(const Monomial& u, int n) {
    if (n == 0) return circ_discharger_word(u);
    if (n == 1) return circ_id_word(u);
    return circ_seq(circ_copier_word(u), circ_tensor(circ_copier_n(u, n - 1), circ_id_word(u)));
}

TapePtr tape_id(const Monomial& u) {
    Tape t{};
    t.kind = Tape::Kind::IdMonomial;
    t.u = u;
    t.dom = t.cod = Polynomial::of(u);
    return make_tape(std::move(t));
}

TapePtr tape_id_zero() {
    Tape t{};
    t.kind = Tape::Kind::IdZero;
    t.dom = t.cod = Polynomial::zero();
    return make_tape(std::move(t));
}

TapePtr tape_embed(CircuitPtr c) {
    Tape t{};
    t.kind = Tape::Kind::Embed;
    t.dom = Polynomial::of(c->dom);
    t.cod = Polynomial::of(c->cod);
    t.circuit = std::move(c);
    return make_tape(std::move(t));
}

TapePtr tape_symmetry_plus(const Monomial& u, const Monomial& v) {
    Tape t{};
    t.kind = Tape::Kind::SymmetryPlus;
    t.u = u;
    t.v = v;
    t.dom = Polynomial{u, v};
    t.cod = Polynomial{v, u};
    return make_tape(std::move(t));
}

TapePtr tape_seq(TapePtr t, TapePtr s) {
    if (t->cod != s->dom)
        throw CompositionMismatch("tape composition: " + to_string(t->cod) + " vs " + to_string(s->dom));
    Tape r{};
    r.kind = Tape::Kind::Seq;
    r.dom = t->dom;
    r.cod = s->cod;
    r.lhs = std::move(t);
    r.rhs = std::move(s);
    return make_tape(std::move(r));
}

TapePtr tape_sum(TapePtr t, TapePtr s) {
    Tape r{};
    r.kind = Tape::Kind::Sum;
    r.dom = poly_sum(t->dom, s->dom);
    r.cod = poly_sum(t->cod, s->cod);
    r.lhs = std::move(t);
    r.rhs = std::move(s);
    return make_tape(std::move(r));
}

static TapePtr tape_mono_structural(Tape::Kind kind, const Monomial& u, Polynomial dom, Polynomial cod) {
    Tape t{};
    t.kind = kind;
    t.u = u;
    t.dom = std::move(dom);
    t.cod = std::move(cod);
    return make_tape(std::move(t));
}

TapePtr tape_bang(const Monomial& u) {
    return tape_mono_structural(Tape::Kind::Bang, u, Polynomial::of(u), Polynomial::zero());
}
TapePtr tape_diag(const Monomial& u) {
    return tape_mono_structural(Tape::Kind::Diag, u, Polynomial::of(u), Polynomial{u, u});
}
TapePtr tape_cobang(const Monomial& u) {
    return tape_mono_structural(Tape::Kind::Cobang, u, Polynomial::zero(), Polynomial::of(u));
}
TapePtr tape_codiag(const Monomial& u) {
    return tape_mono_structural(Tape::Kind::Codiag, u, Polynomial{u, u}, Polynomial::of(u));
}

TapePtr tape_trace(const Monomial& u, TapePtr body) {
    const auto strip = [&](const Polynomial& p) -> Polynomial {
        if (p.summands.empty() || p.summands.front() != u)
            throw TraceShapeMismatch("trace body is not of shape U+P -> U+Q");
        return Polynomial(std::vector<Monomial>(p.summands.begin() + 1, p.summands.end()));
    };
    Polynomial dom = strip(body->dom);
    Polynomial cod = strip(body->cod);
    Tape t{};
    t.kind = Tape::Kind::Trace;
    t.u = u;
    t.dom = std::move(dom);
    t.cod = std::move(cod);
    t.lhs = std::move(body);
    return make_tape(std::move(t));
}

TapePtr tape_id_poly(const Polynomial& p) {
    if (p.is_zero()) return tape_id_zero();
    TapePtr acc = tape_id(p.summands[0]);
    for (std::size_t i = 1; i < p.summands.size(); ++i) acc = tape_sum(acc, tape_id(p.summands[i]));
    return acc;
}

TapePtr tape_seq_all(const std::vector<TapePtr>& ts) {
    if (ts.empty()) throw Error("empty composition chain");
    TapePtr acc = ts[0];
    for (std::size_t i = 1; i < ts.size(); ++i) acc = tape_seq(acc, ts[i]);
    return acc;
}

TapePtr tape_sum_all(const std::vector<TapePtr>& ts) {
    if (ts.empty()) return tape_id_zero();
    TapePtr acc = ts[0];
    for (std::size_t i = 1; i < ts.size(); ++i) acc = tape_sum(acc, ts[i]);
    return acc;
}

namespace {

void check_sort(const Sort& a, const Signature& sig) {
    if (!sig.sorts.count(a)) throw UnknownSymbol("sort '" + a + "' not declared");
}

std::pair<Monomial, Monomial> derive(const Circuit& c, const Signature& sig) {
    switch (c.kind) {
        case Circuit::Kind::IdSort:
            check_sort(c.sort_a, sig);
            return {Monomial{c.sort_a}, Monomial{c.sort_a}};
        case Circuit::Kind::IdUnit:
            return {Monomial::unit(), Monomial::unit()};
        case Circuit::Kind::Generator: {
            const auto& [ar, coar] = sig.arity_of(c.generator_name);
            if (ar != c.gen_arity || coar != c.gen_coarity)
                throw UnknownSymbol("symbol '" + c.generator_name + "' declared with a different arity");
            return {ar, coar};
        }
        case Circuit::Kind::Symmetry:
            check_sort(c.sort_a, sig);
            check_sort(c.sort_b, sig);
            return {Monomial{c.sort_a, c.sort_b}, Monomial{c.sort_b, c.sort_a}};
        case Circuit::Kind::Seq: {
            auto [d1, c1] = derive(*c.lhs, sig);
            auto [d2, c2] = derive(*c.rhs, sig);
            if (c1 != d2) throw CompositionMismatch("circuit composition: " + to_string(c1) + " vs " + to_string(d2));
            return {d1, c2};
        }
        case Circuit::Kind::Tensor: {
            auto [d1, c1] = derive(*c.lhs, sig);
            auto [d2, c2] = derive(*c.rhs, sig);
            return {concat(d1, d2), concat(c1, c2)};
        }
        case Circuit::Kind::Discharger:
            check_sort(c.sort_a, sig);
            return {Monomial{c.sort_a}, Monomial::unit()};
        case Circuit::Kind::Copier:
            check_sort(c.sort_a, sig);
            return {Monomial{c.sort_a}, Monomial{c.sort_a, c.sort_a}};
        case Circuit::Kind::Codischarger:
            check_sort(c.sort_a, sig);
            return {Monomial::unit(), Monomial{c.sort_a}};
        case Circuit::Kind::Cocopier:
            check_sort(c.sort_a, sig);
            return {Monomial{c.sort_a, c.sort_a}, Monomial{c.sort_a}};
    }
    throw Error("unreachable");
}

void check_word(const Monomial& u, const Signature& sig) {
    for (const Sort& a : u.factors) check_sort(a, sig);
}

std::pair<Polynomial, Polynomial> derive(const Tape& t, const Signature& sig) {
    switch (t.kind) {
        case Tape::Kind::IdMonomial:
            check_word(t.u, sig);
            return {Polynomial::of(t.u), Polynomial::of(t.u)};
        case Tape::Kind::IdZero:
            return {Polynomial::zero(), Polynomial::zero()};
        case Tape::Kind::Embed: {
            auto [d, c] = derive(*t.circuit, sig);
            return {Polynomial::of(d), Polynomial::of(c)};
        }
        case Tape::Kind::SymmetryPlus:
            check_word(t.u, sig);
            check_word(t.v, sig);
            return {Polynomial{t.u, t.v}, Polynomial{t.v, t.u}};
        case Tape::Kind::Seq: {
            auto [d1, c1] = derive(*t.lhs, sig);
            auto [d2, c2] = derive(*t.rhs, sig);
            if (c1 != d2) throw CompositionMismatch("tape composition: " + to_string(c1) + " vs " + to_string(d2));
            return {d1, c2};
        }
        case Tape::Kind::Sum: {
            auto [d1, c1] = derive(*t.lhs, sig);
            auto [d2, c2] = derive(*t.rhs, sig);
            return {poly_sum(d1, d2), poly_sum(c1, c2)};
        }
        case Tape::Kind::Bang:
            check_word(t.u, sig);
            return {Polynomial::of(t.u), Polynomial::zero()};
        case Tape::Kind::Diag:
            check_word(t.u, sig);
            return {Polynomial::of(t.u), Polynomial{t.u, t.u}};
        case Tape::Kind::Cobang:
            check_word(t.u, sig);
            return {Polynomial::zero(), Polynomial::of(t.u)};
        case Tape::Kind::Codiag:
            check_word(t.u, sig);
            return {Polynomial{t.u, t.u}, Polynomial::of(t.u)};
        case Tape::Kind::Trace: {
            auto [d, c] = derive(*t.lhs, sig);
            if (d.summands.empty() || c.summands.empty() || d.summands.front() != t.u || c.summands.front() != t.u)
                throw TraceShapeMismatch("trace body is not of shape U+P -> U+Q");
            return {Polynomial(std::vector<Monomial>(d.summands.begin() + 1, d.summands.end())),
                    Polynomial(std::vector<Monomial>(c.summands.begin() + 1, c.summands.end()))};
        }
    }
    throw Error("unreachable");
}

}  // namespace

std::pair<Monomial, Monomial> typecheck(const CircuitPtr& c, const Signature& sig) {
    auto ty = derive(*c, sig);
    if (ty.first != c->dom || ty.second != c->cod) throw TypeMismatch("cached circuit type differs from derived type");
    return ty;
}

std::pair<Polynomial, Polynomial> typecheck(const TapePtr& t, const Signature& sig) {
    auto ty = derive(*t, sig);
    if (ty.first != t->dom || ty.second != t->cod) throw TypeMismatch("cached tape type differs from derived type");
    return ty;
}

bool equal(const CircuitPtr& a, const CircuitPtr& b) {
    if (a.get() == b.get()) return true;
    if (!a || !b) return false;
    if (a->kind != b->kind || a->sort_a != b->sort_a || a->sort_b != b->sort_b ||
        a->generator_name != b->generator_name)
        return false;
    return equal(a->lhs, b->lhs) && equal(a->rhs, b->rhs);
}

bool equal(const TapePtr& a, const TapePtr& b) {
    if (a.get() == b.get()) return true;
    if (!a || !b) return false;
    if (a->kind != b->kind || a->u != b->u || a->v != b->v) return false;
    if (!equal(a->circuit, b->circuit)) return false;
    return equal(a->lhs, b->lhs) && equal(a->rhs, b->rhs);
}

}  // namespace tapes
