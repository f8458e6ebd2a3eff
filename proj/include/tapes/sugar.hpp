#ifndef TAPES_SUGAR_HPP
#define TAPES_SUGAR_HPP

#include "tapes/term.hpp"

namespace tapes {

// Everything here expands eagerly into the core grammar of term.hpp.

enum class WhiskerSide { Left, Right };

/// Monomial whiskerings L_U(t) : U*P -> U*Q and R_U(t) : P*U -> Q*U.
TapePtr whisker_mono(WhiskerSide side, const Monomial& u, const TapePtr& t);

/// Polynomial whiskerings; the right one inserts left distributors.
TapePtr whisker(WhiskerSide side, const Polynomial& x, const TapePtr& t);

/// sigma+_{P,Q} : P+Q -> Q+P for polynomials, from monomial symmetries.
TapePtr poly_symmetry_plus(const Polynomial& p, const Polynomial& q);

/// The left distributor dl_{P,Q,R} : P*(Q+R) -> (P*Q)+(P*R) and its inverse.
TapePtr distributor_left_tape(const Polynomial& p, const Polynomial& q, const Polynomial& r);
TapePtr distributor_left_inv_tape(const Polynomial& p, const Polynomial& q, const Polynomial& r);

/// sigma*_{P,Q} : P*Q -> Q*P.
TapePtr poly_symmetry_tensor(const Polynomial& p, const Polynomial& q);

/// Tensor (co)monoids on polynomials.
TapePtr poly_copier(const Polynomial& p);        // P -> P*P
TapePtr poly_discharger(const Polynomial& p);    // P -> 1
TapePtr poly_cocopier(const Polynomial& p);      // P*P -> P
TapePtr poly_codischarger(const Polynomial& p);  // 1 -> P

/// Sum (co)monoids on polynomials.
TapePtr poly_diag(const Polynomial& p);    // P -> P+P
TapePtr poly_bang(const Polynomial& p);    // P -> 0
TapePtr poly_codiag(const Polynomial& p);  // P+P -> P
TapePtr poly_cobang(const Polynomial& p);  // 0 -> P

/// tr_P with tr_0(t) = t and tr_{U+P}(t) = tr_P(tr_U(t)).
TapePtr trace_poly(const Polynomial& p, const TapePtr& t);

/// t1 * t2 = L_P(t2) ; R_S(t1) for t1 : P -> Q, t2 : R -> S.
TapePtr tensor_tapes(const TapePtr& t1, const TapePtr& t2);

/// Derived operations. Meet and converse are tensor-structure
/// constructions and require monomial-typed arguments; join, bot and
/// star live at the tape layer.
TapePtr derived_meet(const TapePtr& t1, const TapePtr& t2);
TapePtr derived_top(const Polynomial& p, const Polynomial& q);
TapePtr derived_converse(const TapePtr& t);
TapePtr derived_join(const TapePtr& t1, const TapePtr& t2);
TapePtr derived_bot(const Polynomial& p, const Polynomial& q);
TapePtr derived_star(const TapePtr& t);  // requires endo type P -> P

}  // namespace tapes

#endif
