#include "tapes/interp.hpp"

namespace tapes {

void Interpretation::set_relation(const std::string& name, FinRel rel) {
    const auto& [ar, coar] = signature.arity_of(name);
    if (rel.dom() != carrier(ar) || rel.cod() != carrier(coar))
        throw CarrierMismatch("relation for '" + name + "' does not match the declared arity");
    relations.insert_or_assign(name, std::move(rel));
}

const FinRel& Interpretation::relation(const std::string& name) const {
    auto it = relations.find(name);
    if (it == relations.end()) throw UnknownSymbol("no relation assigned to symbol '" + name + "'");
    return it->second;
}

FinRel eval(const CircuitPtr& c, const Interpretation& interp) {
    switch (c->kind) {
        case Circuit::Kind::IdSort:
            return FinRel::identity(interp.carrier(Monomial{c->sort_a}));
        case Circuit::Kind::IdUnit:
            return FinRel::identity(Carrier::unit(interp.sizes));
        case Circuit::Kind::Generator:
            return interp.relation(c->generator_name);
        case Circuit::Kind::Symmetry:
            return symmetry_tensor(interp.carrier(Monomial{c->sort_a}), interp.carrier(Monomial{c->sort_b}));
        case Circuit::Kind::Seq:
            return compose(eval(c->lhs, interp), eval(c->rhs, interp));
        case Circuit::Kind::Tensor:
            return monoidal(MonoidalMode::Tensor, eval(c->lhs, interp), eval(c->rhs, interp));
        case Circuit::Kind::Discharger:
            return generator(GeneratorKind::Discharger, interp.carrier(Monomial{c->sort_a}));
        case Circuit::Kind::Copier:
            return generator(GeneratorKind::Copier, interp.carrier(Monomial{c->sort_a}));
        case Circuit::Kind::Codischarger:
            return generator(GeneratorKind::Codischarger, interp.carrier(Monomial{c->sort_a}));
        case Circuit::Kind::Cocopier:
            return generator(GeneratorKind::Cocopier, interp.carrier(Monomial{c->sort_a}));
    }
    throw Error("unreachable");
}

FinRel eval(const TapePtr& t, const Interpretation& interp) {
    switch (t->kind) {
        case Tape::Kind::IdMonomial:
            return FinRel::identity(interp.carrier(t->u));
        case Tape::Kind::IdZero:
            return FinRel::identity(Carrier::zero(interp.sizes));
        case Tape::Kind::Embed:
            return eval(t->circuit, interp);
        case Tape::Kind::SymmetryPlus:
            return symmetry_sum(interp.carrier(t->u), interp.carrier(t->v));
        case Tape::Kind::Seq:
            return compose(eval(t->lhs, interp), eval(t->rhs, interp));
        case Tape::Kind::Sum:
            return monoidal(MonoidalMode::Sum, eval(t->lhs, interp), eval(t->rhs, interp));
        case Tape::Kind::Bang:
            return generator(GeneratorKind::Bang, interp.carrier(t->u));
        case Tape::Kind::Diag:
            return generator(GeneratorKind::Diag, interp.carrier(t->u));
        case Tape::Kind::Cobang:
            return generator(GeneratorKind::Cobang, interp.carrier(t->u));
        case Tape::Kind::Codiag:
            return generator(GeneratorKind::Codiag, interp.carrier(t->u));
        case Tape::Kind::Trace:
            return trace(interp.carrier(t->u), eval(t->lhs, interp));
    }
    throw Error("unreachable");
}

CheckReport check_inclusion(const TapePtr& lhs, const TapePtr& rhs, const Interpretation& interp) {
    if (lhs->dom != rhs->dom || lhs->cod != rhs->cod) throw TypeMismatch("inclusion between differently typed tapes");
    typecheck(lhs, interp.signature);
    typecheck(rhs, interp.signature);
    FinRel l = eval(lhs, interp);
    FinRel r = eval(rhs, interp);
    CheckReport rep;
    if (auto missing = l.first_missing_from(r)) {
        rep.holds = false;
        rep.witness = missing;
        rep.detail = "pair (" + l.dom().element_name(missing->first) + "," + l.cod().element_name(missing->second) +
                     ") is in the left side only";
    }
    return rep;
}

CheckReport check_theory(const Theory& theory, const Interpretation& interp) {
    for (std::size_t i = 0; i < theory.axioms.size(); ++i) {
        const Axiom& ax = theory.axioms[i];
        CheckReport rep = check_inclusion(ax.lhs, ax.rhs, interp);
        if (rep.holds && ax.is_equality) rep = check_inclusion(ax.rhs, ax.lhs, interp);
        if (!rep.holds) {
            rep.axiom_index = static_cast<int>(i);
            rep.detail = "axiom " + std::to_string(i) + ": " + rep.detail;
            return rep;
        }
    }
    return {};
}

}  // namespace tapes
