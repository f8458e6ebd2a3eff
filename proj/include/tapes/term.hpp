#ifndef TAPES_TERM_HPP
#define TAPES_TERM_HPP

#include <memory>
#include <string>

#include "tapes/poly.hpp"

namespace tapes {

struct Circuit;
using CircuitPtr = std::shared_ptr<const Circuit>;

/// First-layer terms: arrows of the tensor structure, typed by monomials.
/// Immutable; the type is computed at construction and cached.
struct Circuit {
    enum class Kind {
        IdSort,        // id_A
        IdUnit,        // id_1
        Generator,     // s
        Symmetry,      // sigma_{A,B}
        Seq,           // c ; d
        Tensor,        // c * d
        Discharger,    // A -> 1
        Copier,        // A -> A*A
        Codischarger,  // 1 -> A
        Cocopier       // A*A -> A
    };

    Kind kind;
    Sort sort_a, sort_b;
    std::string generator_name;
    Monomial gen_arity, gen_coarity;
    CircuitPtr lhs, rhs;
    Monomial dom, cod;
};

CircuitPtr circ_id(const Sort& a);
CircuitPtr circ_id_unit();
CircuitPtr circ_gen(const Signature& sig, const std::string& name);
CircuitPtr circ_symmetry(const Sort& a, const Sort& b);
CircuitPtr circ_seq(CircuitPtr c, CircuitPtr d);            // throws CompositionMismatch
CircuitPtr circ_tensor(CircuitPtr c, CircuitPtr d);
CircuitPtr circ_discharger(const Sort& a);
CircuitPtr circ_copier(const Sort& a);
CircuitPtr circ_codischarger(const Sort& a);
CircuitPtr circ_cocopier(const Sort& a);

/// Identity circuit on a word, as a tensor of sort identities.
CircuitPtr circ_id_word(const Monomial& u);
/// Word-level symmetry sigma_{U,V} : UV -> VU from the sort-level one.
CircuitPtr circ_symmetry_word(const Monomial& u, const Monomial& v);
/// Word-level tensor (co)monoids.
CircuitPtr circ_copier_word(const Monomial& u);
CircuitPtr circ_discharger_word(const Monomial& u);
CircuitPtr circ_cocopier_word(const Monomial& u);
CircuitPtr circ_codischarger_word(const Monomial& u);
/// n-fold copier U -> U^n: the 0-fold is the discharger,
/// the (n+1)-fold is copier ; (n-fold * id).
CircuitPtr circ_copier_n(const Monomial& u, int n);

struct Tape;
using TapePtr = std::shared_ptr<const Tape>;

/// Second-layer terms: arrows of the sum structure, typed by polynomials.
struct Tape {
    enum class Kind {
        IdMonomial,    // id_U
        IdZero,        // id_0
        Embed,         // a circuit used as a one-branch tape
        SymmetryPlus,  // sigma+_{U,V}
        Seq,           // t ; s
        Sum,           // t + s
        Bang,          // U -> 0
        Diag,          // U -> U+U
        Cobang,        // 0 -> U
        Codiag,        // U+U -> U
        Trace          // tr_U t
    };

    Kind kind;
    Monomial u, v;
    CircuitPtr circuit;
    TapePtr lhs, rhs;
    Polynomial dom, cod;
};

TapePtr tape_id(const Monomial& u);
TapePtr tape_id_zero();
TapePtr tape_embed(CircuitPtr c);
TapePtr tape_symmetry_plus(const Monomial& u, const Monomial& v);
TapePtr tape_seq(TapePtr t, TapePtr s);                      // throws CompositionMismatch
TapePtr tape_sum(TapePtr t, TapePtr s);
TapePtr tape_bang(const Monomial& u);
TapePtr tape_diag(const Monomial& u);
TapePtr tape_cobang(const Monomial& u);
TapePtr tape_codiag(const Monomial& u);
TapePtr tape_trace(const Monomial& u, TapePtr t);            // throws TraceShapeMismatch

/// Identity tape on a polynomial, a sum of monomial identities.
TapePtr tape_id_poly(const Polynomial& p);
/// Sequential composition of a chain, id on the given object when empty.
TapePtr tape_seq_all(const std::vector<TapePtr>& ts);
/// n-ary sum; the empty sum is id_0.
TapePtr tape_sum_all(const std::vector<TapePtr>& ts);

/// Re-derives the type of every subterm against the signature and checks
/// the cached types. Fails with UnknownSymbol, CompositionMismatch or
/// TraceShapeMismatch exactly when no typing rule applies.
std::pair<Monomial, Monomial> typecheck(const CircuitPtr& c, const Signature& sig);
std::pair<Polynomial, Polynomial> typecheck(const TapePtr& t, const Signature& sig);

/// Structural tree equality.
bool equal(const CircuitPtr& a, const CircuitPtr& b);
bool equal(const TapePtr& a, const TapePtr& b);

}  // namespace tapes

#endif
