#ifndef TAPES_CR_HPP
#define TAPES_CR_HPP

#include <memory>
#include <set>
#include <string>

#include "tapes/interp.hpp"

namespace tapes {

/// Expressions of the calculus of relations over a single sort.
struct CRExpr;
using CRPtr = std::shared_ptr<const CRExpr>;

struct CRExpr {
    enum class Kind { Symbol, Id, Seq, Converse, Top, Meet, Star, Bot, Join };
    Kind kind;
    std::string symbol;
    CRPtr lhs, rhs;
};

CRPtr cr_symbol(std::string name);
CRPtr cr_id();
CRPtr cr_top();
CRPtr cr_bot();
CRPtr cr_seq(CRPtr a, CRPtr b);
CRPtr cr_meet(CRPtr a, CRPtr b);
CRPtr cr_join(CRPtr a, CRPtr b);
CRPtr cr_converse(CRPtr a);
CRPtr cr_star(CRPtr a);

/// Concrete syntax: atoms are identifiers, `id`, `top`, `bot`; postfix
/// `^` (converse) and `*` (star) bind tightest and apply left to right,
/// then `;`, then `&`, then `|`; binaries are left associative.
CRPtr parse_cr(const std::string& text);

std::string to_string(const CRPtr& e);
std::set<std::string> cr_symbols(const CRPtr& e);

/// A relational interpretation: one carrier, an endo relation per symbol.
struct CRInterp {
    int size = 1;
    std::map<std::string, FinRel> rho;

    static Carrier carrier_of(int n);
    Carrier carrier() const { return carrier_of(size); }
};

FinRel eval_cr(const CRPtr& e, const CRInterp& interp);

/// The sort and signature the tape encoding targets.
extern const Sort kCRSort;
Signature cr_signature(const std::set<std::string>& symbols);

/// Homomorphic encoding into tapes via the derived operations;
/// evaluating the result agrees with eval_cr.
TapePtr encode_cr(const CRPtr& e, const Signature& sig);

/// The tape-side interpretation matching a CR one.
Interpretation cr_to_interpretation(const CRInterp& interp, const Signature& sig);

}  // namespace tapes

#endif
