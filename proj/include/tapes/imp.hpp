#ifndef TAPES_IMP_HPP
#define TAPES_IMP_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tapes/interp.hpp"

namespace tapes {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;
struct Expr {
    enum class Kind { Var, App };
    Kind kind;
    std::string var;
    std::string fn;
    std::vector<ExprPtr> args;
};

ExprPtr expr_var(std::string x);
ExprPtr expr_app(std::string f, std::vector<ExprPtr> args);

/// Predicate negation is not a node; it is computed by negate().
struct Pred;
using PredPtr = std::shared_ptr<const Pred>;
struct Pred {
    enum class Kind { Atom, NAtom, Top, Bot, And, Or };
    Kind kind;
    std::string pred;
    std::vector<ExprPtr> args;
    PredPtr lhs, rhs;
};

PredPtr pred_atom(std::string r, std::vector<ExprPtr> args);
PredPtr pred_natom(std::string r, std::vector<ExprPtr> args);
PredPtr pred_top();
PredPtr pred_bot();
PredPtr pred_and(PredPtr a, PredPtr b);
PredPtr pred_or(PredPtr a, PredPtr b);

struct Cmd;
using CmdPtr = std::shared_ptr<const Cmd>;
struct Cmd {
    enum class Kind { Abort, Skip, If, While, Seq, Assign };
    Kind kind;
    PredPtr guard;
    CmdPtr c1, c2;
    std::string var;
    ExprPtr expr;
};

CmdPtr cmd_abort();
CmdPtr cmd_skip();
CmdPtr cmd_if(PredPtr guard, CmdPtr then_branch, CmdPtr else_branch);
CmdPtr cmd_while(PredPtr guard, CmdPtr body);
CmdPtr cmd_seq(CmdPtr a, CmdPtr b);
CmdPtr cmd_assign(std::string x, ExprPtr e);

bool equal(const ExprPtr& a, const ExprPtr& b);
bool equal(const PredPtr& a, const PredPtr& b);
bool equal(const CmdPtr& a, const CmdPtr& b);

/// An ordered typing context with pairwise distinct variables.
struct Context {
    std::vector<std::pair<std::string, Sort>> vars;

    void push(const std::string& x, const Sort& a);
    std::optional<std::size_t> find(const std::string& x) const;
    Monomial word() const;  // sorts in declaration order
    std::string state_name(const Carrier& carrier, int state) const;

    friend Context operator+(const Context& a, const Context& b);
};

Context parse_context(const std::string& text);  // "x:A, y:B"

/// Function and predicate symbols of a program signature; the
/// complement of every predicate is declared automatically, named
/// with a '!' prefix.
struct ProgramSignature {
    std::set<Sort> sorts;
    std::map<std::string, std::pair<Monomial, Sort>> functions;
    std::map<std::string, Monomial> predicates;

    static std::string complement_name(const std::string& r) { return "!" + r; }

    Signature to_signature() const;
    /// The axioms every model must satisfy: each function symbol is
    /// single valued and total, each predicate pair is complementary.
    Theory axioms() const;
};

/// Surface syntax parsers; positions are reported on failure.
ExprPtr parse_expr(const std::string& text);
PredPtr parse_pred(const std::string& text);
CmdPtr parse_program(const std::string& text);

/// Type system; errors are UnboundVariable, ArityMismatch, SortMismatch.
Sort typecheck_expr(const Context& ctx, const ExprPtr& e, const ProgramSignature& sig);
void typecheck_pred(const Context& ctx, const PredPtr& p, const ProgramSignature& sig);
void typecheck_cmd(const Context& ctx, const CmdPtr& c, const ProgramSignature& sig);

/// Structural De Morgan transform.
PredPtr negate(const PredPtr& p);

/// Capture-free substitution of t for x; the declared sort of x must
/// equal the sort of t in the context.
ExprPtr substitute(const Context& ctx, const ProgramSignature& sig, const ExprPtr& e, const ExprPtr& t,
                   const std::string& x);
PredPtr substitute(const Context& ctx, const ProgramSignature& sig, const PredPtr& p, const ExprPtr& t,
                   const std::string& x);

/// Encodings into diagrams; commands get endo type, predicates map to
/// the unit, expressions to their sort.
CircuitPtr encode_expr(const Context& ctx, const ExprPtr& e, const ProgramSignature& sig);
TapePtr encode_pred(const Context& ctx, const PredPtr& p, const ProgramSignature& sig);
TapePtr encode_cmd(const Context& ctx, const CmdPtr& c, const ProgramSignature& sig);

/// The coreflexive of a predicate tape g : U -> 1, as copy ; (id * g).
TapePtr coreflexive(const TapePtr& pred_tape);
/// The predicate of a coreflexive tape f : U -> U, as f ; discard.
/// When an interpretation is supplied the argument is checked to
/// evaluate to a coreflexive.
TapePtr image(const TapePtr& coreflexive_tape, const Interpretation* check = nullptr);

/// Completes an interpretation with derived complement relations for
/// the predicates that lack one, then verifies it is a model of the
/// signature's axioms; throws NotAModel otherwise.
Interpretation restrict_interpretation(const ProgramSignature& sig, const Interpretation& interp);

}  // namespace tapes

#endif
