#include "tapes/sugar.hpp"

#include <vector>

namespace tapes {

namespace {

Polynomial tail(const Polynomial& p) {
    return Polynomial(std::vector<Monomial>(p.summands.begin() + 1, p.summands.end()));
}

// sigma+_{U,Q} : U+Q -> Q+U for a monomial U
TapePtr mono_symmetry_plus(const Monomial& u, const Polynomial& q) {
    if (q.is_zero()) return tape_id(u);
    const Monomial& v = q.summands.front();
    Polynomial rest = tail(q);
    TapePtr step1 = tape_sum(tape_symmetry_plus(u, v), tape_id_poly(rest));
    TapePtr step2 = tape_sum(tape_id(v), mono_symmetry_plus(u, rest));
    return tape_seq(step1, step2);
}

}  // namespace

TapePtr poly_symmetry_plus(const Polynomial& p, const Polynomial& q) {
    if (p.is_zero()) return tape_id_poly(q);
    const Monomial& u = p.summands.front();
    Polynomial rest = tail(p);
    TapePtr step1 = tape_sum(tape_id(u), poly_symmetry_plus(rest, q));
    TapePtr step2 = tape_sum(mono_symmetry_plus(u, q), tape_id_poly(rest));
    return tape_seq(step1, step2);
}

TapePtr distributor_left_tape(const Polynomial& p, const Polynomial& q, const Polynomial& r) {
    if (p.is_zero()) return tape_id_zero();
    const Monomial& u = p.summands.front();
    Polynomial rest = tail(p);
    Polynomial qr = poly_sum(q, r);
    TapePtr step1 = tape_sum(tape_id_poly(poly_product(Polynomial::of(u), qr)), distributor_left_tape(rest, q, r));
    TapePtr mid = poly_symmetry_plus(poly_product(Polynomial::of(u), r), poly_product(rest, q));
    TapePtr step2 = tape_sum(tape_sum(tape_id_poly(poly_product(Polynomial::of(u), q)), mid),
                             tape_id_poly(poly_product(rest, r)));
    return tape_seq(step1, step2);
}

TapePtr distributor_left_inv_tape(const Polynomial& p, const Polynomial& q, const Polynomial& r) {
    if (p.is_zero()) return tape_id_zero();
    const Monomial& u = p.summands.front();
    Polynomial rest = tail(p);
    Polynomial qr = poly_sum(q, r);
    TapePtr mid = poly_symmetry_plus(poly_product(rest, q), poly_product(Polynomial::of(u), r));
    TapePtr step1 = tape_sum(tape_sum(tape_id_poly(poly_product(Polynomial::of(u), q)), mid),
                             tape_id_poly(poly_product(rest, r)));
    TapePtr step2 =
        tape_sum(tape_id_poly(poly_product(Polynomial::of(u), qr)), distributor_left_inv_tape(rest, q, r));
    return tape_seq(step1, step2);
}

TapePtr whisker_mono(WhiskerSide side, const Monomial& u, const TapePtr& t) {
    const bool left = side == WhiskerSide::Left;
    auto put = [&](const Monomial& v) { return left ? concat(u, v) : concat(v, u); };
    switch (t->kind) {
        case Tape::Kind::IdMonomial:
            return tape_id(put(t->u));
        case Tape::Kind::IdZero:
            return tape_id_zero();
        case Tape::Kind::Embed: {
            CircuitPtr c = left ? circ_tensor(circ_id_word(u), t->circuit) : circ_tensor(t->circuit, circ_id_word(u));
            return tape_embed(std::move(c));
        }
        case Tape::Kind::SymmetryPlus:
            return tape_symmetry_plus(put(t->u), put(t->v));
        case Tape::Kind::Seq:
            return tape_seq(whisker_mono(side, u, t->lhs), whisker_mono(side, u, t->rhs));
        case Tape::Kind::Sum:
            return tape_sum(whisker_mono(side, u, t->lhs), whisker_mono(side, u, t->rhs));
        case Tape::Kind::Bang:
            return tape_bang(put(t->u));
        case Tape::Kind::Diag:
            return tape_diag(put(t->u));
        case Tape::Kind::Cobang:
            return tape_cobang(put(t->u));
        case Tape::Kind::Codiag:
            return tape_codiag(put(t->u));
        case Tape::Kind::Trace:
            return tape_trace(put(t->u), whisker_mono(side, u, t->lhs));
    }
    throw Error("unreachable");
}

TapePtr whisker(WhiskerSide side, const Polynomial& x, const TapePtr& t) {
    if (x.is_zero()) return tape_id_zero();
    if (x.branches() == 1) return whisker_mono(side, x.summands.front(), t);
    const Monomial& w = x.summands.front();
    Polynomial rest = tail(x);
    if (side == WhiskerSide::Left) return tape_sum(whisker_mono(side, w, t), whisker(side, rest, t));
    TapePtr inner = tape_sum(whisker_mono(side, w, t), whisker(side, rest, t));
    return tape_seq_all({distributor_left_tape(t->dom, Polynomial::of(w), rest), inner,
                         distributor_left_inv_tape(t->cod, Polynomial::of(w), rest)});
}

TapePtr poly_symmetry_tensor(const Polynomial& p, const Polynomial& q) {
    if (q.is_zero()) return tape_id_zero();
    const Monomial& v = q.summands.front();
    Polynomial rest = tail(q);
    std::vector<TapePtr> swaps;
    swaps.reserve(p.branches());
    for (const Monomial& ui : p.summands) swaps.push_back(tape_embed(circ_symmetry_word(ui, v)));
    TapePtr step2 = tape_sum(tape_sum_all(swaps), poly_symmetry_tensor(p, rest));
    if (p.is_zero()) return step2;  // both sides are id_0 shaped
    return tape_seq(distributor_left_tape(p, Polynomial::of(v), rest), step2);
}

TapePtr poly_copier(const Polynomial& p) {
    if (p.is_zero()) return tape_id_zero();
    const Monomial& u = p.summands.front();
    Polynomial rest = tail(p);
    Polynomial pu = Polynomial::of(u);
    TapePtr first = tape_embed(circ_copier_word(u));
    if (rest.is_zero()) return first;
    TapePtr third = tape_seq(tape_sum(poly_cobang(poly_product(rest, pu)), poly_copier(rest)),
                             distributor_left_inv_tape(rest, pu, rest));
    return tape_sum_all({first, poly_cobang(poly_product(pu, rest)), third});
}

TapePtr poly_discharger(const Polynomial& p) {
    if (p.is_zero()) return tape_cobang(Monomial::unit());
    const Monomial& u = p.summands.front();
    Polynomial rest = tail(p);
    TapePtr first = tape_embed(circ_discharger_word(u));
    if (rest.is_zero()) return first;
    return tape_seq(tape_sum(first, poly_discharger(rest)), tape_codiag(Monomial::unit()));
}

TapePtr poly_cocopier(const Polynomial& p) {
    if (p.is_zero()) return tape_id_zero();
    const Monomial& u = p.summands.front();
    Polynomial rest = tail(p);
    Polynomial pu = Polynomial::of(u);
    TapePtr first = tape_embed(circ_cocopier_word(u));
    if (rest.is_zero()) return first;
    TapePtr third = tape_seq(distributor_left_tape(rest, pu, rest),
                             tape_sum(poly_bang(poly_product(rest, pu)), poly_cocopier(rest)));
    return tape_sum_all({first, poly_bang(poly_product(pu, rest)), third});
}

TapePtr poly_codischarger(const Polynomial& p) {
    if (p.is_zero()) return tape_bang(Monomial::unit());
    const Monomial& u = p.summands.front();
    Polynomial rest = tail(p);
    TapePtr first = tape_embed(circ_codischarger_word(u));
    if (rest.is_zero()) return first;
    return tape_seq(tape_diag(Monomial::unit()), tape_sum(first, poly_codischarger(rest)));
}

TapePtr poly_diag(const Polynomial& p) {
    if (p.is_zero()) return tape_id_zero();
    const Monomial& u = p.summands.front();
    Polynomial rest = tail(p);
    if (rest.is_zero()) return tape_diag(u);
    TapePtr step1 = tape_sum(tape_diag(u), poly_diag(rest));
    TapePtr step2 = tape_sum_all({tape_id(u), mono_symmetry_plus(u, rest), tape_id_poly(rest)});
    return tape_seq(step1, step2);
}

TapePtr poly_bang(const Polynomial& p) {
    if (p.is_zero()) return tape_id_zero();
    TapePtr acc = tape_bang(p.summands.front());
    for (std::size_t i = 1; i < p.summands.size(); ++i) acc = tape_sum(acc, tape_bang(p.summands[i]));
    return acc;
}

TapePtr poly_codiag(const Polynomial& p) {
    if (p.is_zero()) return tape_id_zero();
    const Monomial& u = p.summands.front();
    Polynomial rest = tail(p);
    if (rest.is_zero()) return tape_codiag(u);
    TapePtr step1 = tape_sum_all({tape_id(u), poly_symmetry_plus(rest, Polynomial::of(u)), tape_id_poly(rest)});
    TapePtr step2 = tape_sum(tape_codiag(u), poly_codiag(rest));
    return tape_seq(step1, step2);
}

TapePtr poly_cobang(const Polynomial& p) {
    if (p.is_zero()) return tape_id_zero();
    TapePtr acc = tape_cobang(p.summands.front());
    for (std::size_t i = 1; i < p.summands.size(); ++i) acc = tape_sum(acc, tape_cobang(p.summands[i]));
    return acc;
}

TapePtr trace_poly(const Polynomial& p, const TapePtr& t) {
    if (p.is_zero()) return t;
    return trace_poly(tail(p), tape_trace(p.summands.front(), t));
}

TapePtr tensor_tapes(const TapePtr& t1, const TapePtr& t2) {
    return tape_seq(whisker(WhiskerSide::Left, t1->dom, t2), whisker(WhiskerSide::Right, t2->cod, t1));
}

namespace {

Monomial mono_type(const Polynomial& p, const char* what) {
    if (p.branches() != 1) throw TypeMismatch(std::string(what) + " requires a monomial-typed argument");
    return p.summands.front();
}

}  // namespace

TapePtr derived_meet(const TapePtr& t1, const TapePtr& t2) {
    if (t1->dom != t2->dom || t1->cod != t2->cod) throw TypeMismatch("meet of differently typed tapes");
    Monomial u = mono_type(t1->dom, "meet");
    Monomial v = mono_type(t1->cod, "meet");
    return tape_seq_all({tape_embed(circ_copier_word(u)), tensor_tapes(t1, t2), tape_embed(circ_cocopier_word(v))});
}

TapePtr derived_top(const Polynomial& p, const Polynomial& q) {
    return tape_seq(poly_discharger(p), poly_codischarger(q));
}

TapePtr derived_converse(const TapePtr& t) {
    Monomial u = mono_type(t->dom, "converse");
    Monomial v = mono_type(t->cod, "converse");
    // cup 1 -> UU and cap VV -> 1 from the Frobenius structure
    CircuitPtr cup = circ_seq(circ_codischarger_word(u), circ_copier_word(u));
    CircuitPtr cap = circ_seq(circ_cocopier_word(v), circ_discharger_word(v));
    TapePtr step1 = tensor_tapes(tape_embed(cup), tape_id(v));
    TapePtr step2 = tensor_tapes(tape_id(u), tensor_tapes(t, tape_id(v)));
    TapePtr step3 = tensor_tapes(tape_id(u), tape_embed(cap));
    return tape_seq_all({step1, step2, step3});
}

TapePtr derived_join(const TapePtr& t1, const TapePtr& t2) {
    if (t1->dom != t2->dom || t1->cod != t2->cod) throw TypeMismatch("join of differently typed tapes");
    return tape_seq_all({poly_diag(t1->dom), tape_sum(t1, t2), poly_codiag(t1->cod)});
}

TapePtr derived_bot(const Polynomial& p, const Polynomial& q) {
    return tape_seq(poly_bang(p), poly_cobang(q));
}

TapePtr derived_star(const TapePtr& t) {
    if (t->dom != t->cod) throw TypeMismatch("star requires an endo-typed tape");
    const Polynomial& p = t->dom;
    TapePtr body = tape_seq_all({tape_sum(t, tape_id_poly(p)), poly_codiag(p), poly_diag(p)});
    return trace_poly(p, body);
}

}  // namespace tapes
