#ifndef TAPES_INTERP_HPP
#define TAPES_INTERP_HPP

#include <optional>
#include <string>
#include <vector>

#include "tapes/finrel.hpp"
#include "tapes/term.hpp"

namespace tapes {

/// Carrier sizes for the sorts plus one relation per signature symbol.
struct Interpretation {
    Signature signature;
    SortSizes sizes;
    std::map<std::string, FinRel> relations;

    Carrier carrier(const Polynomial& p) const { return Carrier(p, sizes); }
    Carrier carrier(const Monomial& u) const { return Carrier(Polynomial::of(u), sizes); }

    /// Registers the relation of a declared symbol; the carriers must
    /// match the symbol's (co)arity under the size assignment.
    void set_relation(const std::string& name, FinRel rel);
    const FinRel& relation(const std::string& name) const;
};

/// The semantic functor: structural recursion onto the relation backend.
FinRel eval(const CircuitPtr& c, const Interpretation& interp);
FinRel eval(const TapePtr& t, const Interpretation& interp);

struct CheckReport {
    bool holds = true;
    int axiom_index = -1;
    std::optional<std::pair<int, int>> witness;
    std::string detail;
};

/// Holds iff eval(lhs) is included in eval(rhs); the witness is the
/// least pair (in the canonical enumeration) present only on the left.
CheckReport check_inclusion(const TapePtr& lhs, const TapePtr& rhs, const Interpretation& interp);

struct Axiom {
    TapePtr lhs, rhs;
    bool is_equality = false;  // equalities are checked as two inclusions
};

struct Theory {
    Signature signature;
    std::vector<Axiom> axioms;
};

/// Holds iff every axiom inclusion holds; the first failing axiom is
/// reported together with its witness.
CheckReport check_theory(const Theory& theory, const Interpretation& interp);

}  // namespace tapes

#endif
