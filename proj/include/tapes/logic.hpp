#ifndef TAPES_LOGIC_HPP
#define TAPES_LOGIC_HPP

#include "tapes/imp.hpp"

namespace tapes {

enum class TripleKind { Hoare, Incorrectness, SufficientIncorrectness, Necessary };

struct Triple {
    TripleKind kind = TripleKind::Hoare;
    Context ctx;
    PredPtr pre, post;
    CmdPtr cmd;
};

struct Quadruple {
    Context ctx1, ctx2;
    CmdPtr c1, c2;
    PredPtr pre, post;  // typed in the joint context ctx1, ctx2
};

/// Validity per logic, over one model at a time:
///   hoare                    pre^ ; C <= post^
///   incorrectness            pre^ ; C >= post^
///   sufficient incorrectness pre <= C ; post
///   necessary                pre >= C ; post
/// The interpretation must satisfy the signature axioms; missing
/// complement relations are derived first.
CheckReport check_triple(const Triple& triple, const ProgramSignature& sig, const Interpretation& interp);

/// RHL validity: pre^ ; (C1 * C2) <= post^ over the product carrier.
CheckReport check_quadruple(const Quadruple& quad, const ProgramSignature& sig, const Interpretation& interp);

enum class HoareRule { Skip, Assn, Conseq, Seq, If, While };

/// Checks the instance against the rule schema, then that premise
/// validity implies conclusion validity in the given model. A failing
/// premise makes the instance vacuously sound and is reported.
CheckReport verify_hoare_rule_instance(HoareRule rule, const std::vector<Triple>& premises, const Triple& conclusion,
                                       const ProgramSignature& sig, const Interpretation& interp);

/// Text forms:
///   {P} C {Q}      hoare          [P] C [Q]        incorrectness
///   <<P>> C <<Q>>  sufficient     (P) C (Q)        necessary
/// and `rel {P} C1 ~ C2 {Q}` for quadruples.
Triple parse_triple(const std::string& text, Context ctx);
Quadruple parse_quadruple(const std::string& text, Context ctx1, Context ctx2);

/// Reference semantics of a command on one state: iterate the
/// operational rules, detecting divergence by cycle detection; used as
/// the independent oracle for the while-loop law.
std::optional<int> run_command(const CmdPtr& c, const Context& ctx, const ProgramSignature& sig,
                               const Interpretation& interp, int state);

}  // namespace tapes

#endif
