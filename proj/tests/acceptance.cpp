// Acceptance suite: every criterion prints one pass/fail line; the
// process exits nonzero if any criterion fails.
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "tapes/cr.hpp"
#include "tapes/kleene.hpp"
#include "tapes/laws.hpp"
#include "tapes/logic.hpp"
#include "tapes/search.hpp"
#include "tapes/sugar.hpp"

using namespace tapes;

namespace {

int g_failures = 0;

void criterion(int number, const std::string& title, const std::function<std::string()>& run) {
    std::string failure;
    try {
        failure = run();
    } catch (const std::exception& e) {
        failure = std::string("exception: ") + e.what();
    }
    if (failure.empty()) {
        std::cout << "[PASS] criterion " << number << ": " << title << "\n";
    } else {
        ++g_failures;
        std::cout << "[FAIL] criterion " << number << ": " << title << " -- " << failure << "\n";
    }
}

std::string suite_failures(const std::vector<std::string>& suites, int samples, std::uint64_t seed, int max_size) {
    for (const std::string& name : suites) {
        for (const LawCheck& check : run_law_suite(name, samples, seed, max_size)) {
            if (!check.ok())
                return name + "/" + check.name + ": " + std::to_string(check.failures) + " violations (" +
                       check.witness + ")";
        }
    }
    return {};
}

FinRel random_rel(std::mt19937_64& rng, const Carrier& dom, const Carrier& cod) {
    FinRel r(dom, cod);
    for (int x = 0; x < dom.size(); ++x)
        for (int y = 0; y < cod.size(); ++y)
            if (rng() & 1) r.insert(x, y);
    return r;
}

Carrier set_of(int n, const char* sort = "A") {
    return Carrier(Polynomial::of_sort(sort), SortSizes{{sort, n}});
}

// ---- shared program-logic fixtures -------------------------------------

ProgramSignature mod_signature() {
    ProgramSignature sig;
    sig.sorts.insert("A");
    sig.functions["s"] = {Monomial{"A"}, "A"};
    sig.predicates["eq0"] = Monomial{"A"};
    sig.predicates["eq1"] = Monomial{"A"};
    sig.predicates["eq2"] = Monomial{"A"};
    return sig;
}

Interpretation mod_interp(int n, const ProgramSignature& sig) {
    Interpretation interp;
    interp.signature = sig.to_signature();
    interp.sizes["A"] = n;
    Carrier x = interp.carrier(Monomial{"A"});
    Carrier one = Carrier::unit(interp.sizes);
    FinRel succ(x, x);
    for (int k = 0; k < n; ++k) succ.insert(k, (k + 1) % n);
    interp.relations.emplace("s", std::move(succ));
    for (int c = 0; c < 3; ++c) {
        FinRel eq(x, one);
        if (c < n) eq.insert(c, 0);
        interp.relations.emplace("eq" + std::to_string(c), std::move(eq));
    }
    return restrict_interpretation(sig, interp);
}

// ---- criterion bodies ---------------------------------------------------

std::string axiom_suite() {
    return suite_failures({"fb-axioms", "trace-axioms", "cb-axioms", "coherence", "uniformity"}, 500, 2024, 4);
}

std::string kozen_suite() {
    // relations: >= 500 random endo-relations of size <= 5, all four lines
    std::mt19937_64 rng(515);
    for (int k = 0; k < 500; ++k) {
        int n = static_cast<int>(rng() % 6);
        Carrier x = set_of(n);
        Carrier y = set_of(1 + static_cast<int>(rng() % 5), "B");
        FinRel f = random_rel(rng, x, x);
        FinRel fs = star(f);
        FinRel idx = FinRel::identity(x);
        if (!idx.join(compose(f, fs)).subset_of(fs)) return "relation left unfolding fails";
        if (!idx.join(compose(fs, f)).subset_of(fs)) return "relation right unfolding fails";
        // constructed premises: r = f*;g and l = g;f* always satisfy them
        FinRel g = random_rel(rng, x, y);
        FinRel r = compose(fs, g);
        if (!compose(f, r).subset_of(r)) return "constructed premise broken";
        if (!compose(fs, r).subset_of(r)) return "relation left induction fails";
        FinRel h = random_rel(rng, y, x);
        FinRel l = compose(h, fs);
        if (!compose(l, f).subset_of(l)) return "constructed premise broken";
        if (!compose(l, fs).subset_of(l)) return "relation right induction fails";
    }

    // boolean matrices: exhaustive up to 4x4 for the unfolding laws,
    // seeded right-hand sides for the implications
    std::mt19937_64 mrng(516);
    for (std::size_t n = 1; n <= 4; ++n) {
        std::vector<int> objs(n, 0);
        KAMatrix<BoolKA> idm = mat_identity<BoolKA>(objs);
        auto leq = [](const KAMatrix<BoolKA>& a, const KAMatrix<BoolKA>& b) { return mat_equal(mat_join(a, b), b); };
        for (unsigned long long mask = 0; mask < (1ull << (n * n)); ++mask) {
            KAMatrix<BoolKA> f{objs, objs, {}};
            for (std::size_t k = 0; k < n * n; ++k) f.entries.push_back((mask >> k) & 1);
            KAMatrix<BoolKA> fs = mat_star(f);
            if (!leq(mat_join(idm, mat_compose(f, fs)), fs)) return "matrix left unfolding fails";
            if (!leq(mat_join(idm, mat_compose(fs, f)), fs)) return "matrix right unfolding fails";
            for (int t = 0; t < 2; ++t) {
                std::size_t m = 1 + mrng() % 4;
                KAMatrix<BoolKA> g{objs, std::vector<int>(m, 0), {}};
                for (std::size_t k = 0; k < n * m; ++k) g.entries.push_back((mrng() & 1) != 0);
                KAMatrix<BoolKA> r = mat_compose(fs, g);
                if (!leq(mat_compose(f, r), r)) return "matrix premise broken";
                if (!leq(mat_compose(fs, r), r)) return "matrix left induction fails";
                KAMatrix<BoolKA> h{std::vector<int>(m, 0), objs, {}};
                for (std::size_t k = 0; k < n * m; ++k) h.entries.push_back((mrng() & 1) != 0);
                KAMatrix<BoolKA> l = mat_compose(h, fs);
                if (!leq(mat_compose(l, f), l)) return "matrix premise broken";
                if (!leq(mat_compose(l, fs), l)) return "matrix right induction fails";
            }
        }
    }
    return {};
}

std::string star_trace_agreement() {
    for (int n = 0; n <= 3; ++n) {
        Carrier x = set_of(n);
        for (unsigned long long mask = 0; mask < (1ull << (n * n)); ++mask) {
            FinRel r = FinRel::from_mask(x, x, mask);
            if (star(r) != star_via_trace(r))
                return "disagreement at size " + std::to_string(n) + ", mask " + std::to_string(mask);
        }
    }
    std::mt19937_64 rng(303);
    for (int k = 0; k < 400; ++k) {
        Carrier x = set_of(4 + static_cast<int>(rng() % 2));
        FinRel r = random_rel(rng, x, x);
        if (star(r) != star_via_trace(r)) return "random disagreement at size " + std::to_string(x.size());
    }
    return {};
}

std::string matrix_normal_form() {
    // every split with |S|+|X|+|T|+|Y| <= 4, every relation, every pair
    SortSizes sizes;
    for (int s = 0; s <= 4; ++s)
        for (int x = 0; x + s <= 4; ++x)
            for (int t = 0; t + s + x <= 4; ++t)
                for (int y = 0; y + t + s + x <= 4; ++y) {
                    SortSizes sz{{"S", s}, {"X", x}, {"T", t}, {"Y", y}};
                    Carrier cs(Polynomial::of_sort("S"), sz);
                    Carrier cx(Polynomial::of_sort("X"), sz);
                    Carrier ct(Polynomial::of_sort("T"), sz);
                    Carrier cy(Polynomial::of_sort("Y"), sz);
                    Carrier dom = cs.sum(cx), cod = ct.sum(cy);
                    int bits = dom.size() * cod.size();
                    std::vector<FinRel> all;
                    for (unsigned long long mask = 0; mask < (1ull << bits); ++mask)
                        all.push_back(FinRel::from_mask(dom, cod, mask));
                    for (const FinRel& f : all) {
                        Blocks bf = blocks(f, cs, cx, ct, cy);
                        if (recompose(bf) != f) return "recompose(blocks(f)) != f";
                        for (const FinRel& g : all) {
                            Blocks bg = blocks(g, cs, cx, ct, cy);
                            bool blockwise = bf.st.subset_of(bg.st) && bf.sy.subset_of(bg.sy) &&
                                             bf.xt.subset_of(bg.xt) && bf.xy.subset_of(bg.xy);
                            if (f.subset_of(g) != blockwise) return "blockwise order mismatch";
                        }
                    }
                }
    (void)sizes;
    return {};
}

std::string coreflexive_bijection() {
    // i(c(g)) = g and c(i(f)) = f through the tape constructors
    for (int n = 1; n <= 4; ++n) {
        Interpretation interp;
        interp.signature.add_sort("A");
        interp.signature.add_symbol("g", Monomial{"A"}, Monomial::unit());
        interp.signature.add_symbol("h", Monomial{"A"}, Monomial{"A"});
        interp.sizes["A"] = n;
        Carrier x = interp.carrier(Monomial{"A"});
        Carrier one = Carrier::unit(interp.sizes);
        for (unsigned long long mask = 0; mask < (1ull << n); ++mask) {
            FinRel g(x, one);
            FinRel f(x, x);
            for (int k = 0; k < n; ++k)
                if (mask & (1ull << k)) {
                    g.insert(k, 0);
                    f.insert(k, k);
                }
            interp.relations.insert_or_assign("g", g);
            interp.relations.insert_or_assign("h", f);
            TapePtr gt = tape_embed(circ_gen(interp.signature, "g"));
            TapePtr ht = tape_embed(circ_gen(interp.signature, "h"));
            if (eval(image(coreflexive(gt), &interp), interp) != g) return "i(c(g)) != g";
            if (eval(coreflexive(image(ht, &interp)), interp) != f) return "c(i(f)) != f";
        }
    }
    // COR iff TRN and SYM and SV, exhaustive at size <= 3
    for (int n = 0; n <= 3; ++n) {
        Carrier x = set_of(n);
        for (unsigned long long mask = 0; mask < (1ull << (n * n)); ++mask) {
            FinRel r = FinRel::from_mask(x, x, mask);
            bool trio = arrow_property(r, ArrowProperty::TRN) && arrow_property(r, ArrowProperty::SYM) &&
                        arrow_property(r, ArrowProperty::SV);
            if (arrow_property(r, ArrowProperty::COR) != trio) return "COR does not match the trio";
        }
    }
    return {};
}

std::string derived_law_suite() { return suite_failures({"cb-derived", "kc-derived"}, 300, 606, 3); }

std::string cr_soundness() {
    std::mt19937_64 rng(707);
    const std::vector<std::string> symbols{"R", "S"};
    Signature sig = cr_signature({"R", "S"});
    std::function<CRPtr(int)> gen = [&](int depth) -> CRPtr {
        if (depth == 0 || rng() % 4 == 0) {
            switch (rng() % 5) {
                case 0:
                    return cr_id();
                case 1:
                    return cr_top();
                case 2:
                    return cr_bot();
                default:
                    return cr_symbol(symbols[rng() % 2]);
            }
        }
        switch (rng() % 5) {
            case 0:
                return cr_seq(gen(depth - 1), gen(depth - 1));
            case 1:
                return cr_meet(gen(depth - 1), gen(depth - 1));
            case 2:
                return cr_join(gen(depth - 1), gen(depth - 1));
            case 3:
                return cr_converse(gen(depth - 1));
            default:
                return cr_star(gen(depth - 1));
        }
    };
    for (int k = 0; k < 200; ++k) {
        CRInterp interp;
        interp.size = 1 + static_cast<int>(rng() % 3);
        Carrier x = interp.carrier();
        for (const std::string& s : symbols) interp.rho.emplace(s, random_rel(rng, x, x));
        CRPtr e = gen(5);
        if (eval_cr(e, interp) != eval(encode_cr(e, sig), cr_to_interpretation(interp, sig)))
            return "mismatch on " + to_string(e);
    }
    return {};
}

std::string program_equivalences() {
    ProgramSignature sig = mod_signature();
    {
        Interpretation interp = mod_interp(2, sig);
        Context ctx = parse_context("x:A, y:A, z:A");
        FinRel left = eval(encode_cmd(ctx, parse_program("x := z; y := z"), sig), interp);
        FinRel right = eval(encode_cmd(ctx, parse_program("y := z; x := z"), sig), interp);
        if (left != right) return "(a) assignment pair differs";
        Carrier state = interp.carrier(ctx.word());
        FinRel want(state, state);
        for (int x = 0; x < 2; ++x)
            for (int y = 0; y < 2; ++y)
                for (int z = 0; z < 2; ++z)
                    want.insert(state.index_of(0, std::vector<int>{x, y, z}),
                                state.index_of(0, std::vector<int>{z, z, z}));
        if (left != want) return "(a) wrong value";
    }
    {
        Interpretation interp = mod_interp(2, sig);
        Context ctx = parse_context("x:A, y:A");
        FinRel first =
            eval(encode_cmd(ctx, parse_program("x := s(x); if eq0(y) then y := s(y) else skip end"), sig), interp);
        FinRel second =
            eval(encode_cmd(ctx, parse_program("if eq0(y) then y := s(y) else skip end; x := s(x)"), sig), interp);
        if (first != second) return "(b) commutation fails over Z_2";
    }
    {
        Context ctx = parse_context("x:A, y:A");
        CmdPtr loop = parse_program("while eq0(x) do y := s(y) end");
        CmdPtr branch = parse_program("if eq0(x) then abort else skip end");
        for (int n : {2, 3, 4}) {
            Interpretation interp = mod_interp(n, sig);
            if (eval(encode_cmd(ctx, loop, sig), interp) != eval(encode_cmd(ctx, branch, sig), interp))
                return "(c) loop equivalence fails at modulus " + std::to_string(n);
        }
    }
    return {};
}

std::string hoare_soundness_sweep() {
    ProgramSignature sig = mod_signature();
    Context ctx = parse_context("x:A, y:A");
    std::mt19937_64 rng(909);

    std::function<ExprPtr(int)> random_expr = [&](int depth) -> ExprPtr {
        if (depth == 0 || rng() % 2 == 0) return expr_var(rng() % 2 ? "x" : "y");
        return expr_app("s", {random_expr(depth - 1)});
    };
    std::function<PredPtr(int)> random_pred = [&](int depth) -> PredPtr {
        if (depth == 0 || rng() % 3 == 0) {
            switch (rng() % 4) {
                case 0:
                    return pred_top();
                case 1:
                    return pred_bot();
                case 2:
                    return pred_atom("eq" + std::to_string(rng() % 3), {random_expr(1)});
                default:
                    return pred_natom("eq" + std::to_string(rng() % 3), {random_expr(1)});
            }
        }
        return rng() % 2 ? pred_and(random_pred(depth - 1), random_pred(depth - 1))
                         : pred_or(random_pred(depth - 1), random_pred(depth - 1));
    };
    std::function<CmdPtr(int)> random_cmd = [&](int depth) -> CmdPtr {
        if (depth == 0 || rng() % 3 == 0) {
            switch (rng() % 3) {
                case 0:
                    return cmd_skip();
                case 1:
                    return cmd_abort();
                default:
                    return cmd_assign(rng() % 2 ? "x" : "y", random_expr(1));
            }
        }
        switch (rng() % 3) {
            case 0:
                return cmd_seq(random_cmd(depth - 1), random_cmd(depth - 1));
            case 1:
                return cmd_if(random_pred(1), random_cmd(depth - 1), random_cmd(depth - 1));
            default:
                return cmd_while(random_pred(1), random_cmd(depth - 1));
        }
    };

    for (int k = 0; k < 100; ++k) {
        Interpretation interp = mod_interp(2 + static_cast<int>(rng() % 2), sig);
        {
            Triple t{TripleKind::Hoare, ctx, random_pred(2), nullptr, cmd_skip()};
            t.post = t.pre;
            if (!verify_hoare_rule_instance(HoareRule::Skip, {}, t, sig, interp).holds) return "(skip) violated";
        }
        {
            std::string var = rng() % 2 ? "x" : "y";
            ExprPtr e = random_expr(2);
            Triple t{TripleKind::Hoare, ctx, nullptr, random_pred(2), cmd_assign(var, e)};
            t.pre = substitute(ctx, sig, t.post, e, var);
            if (!verify_hoare_rule_instance(HoareRule::Assn, {}, t, sig, interp).holds) return "(assn) violated";
        }
        {
            Triple premise{TripleKind::Hoare, ctx, random_pred(2), random_pred(2), random_cmd(2)};
            Triple conclusion = premise;
            conclusion.pre = pred_and(premise.pre, random_pred(1));
            conclusion.post = pred_or(premise.post, random_pred(1));
            if (!verify_hoare_rule_instance(HoareRule::Conseq, {premise}, conclusion, sig, interp).holds)
                return "(conseq) violated";
        }
        {
            Triple p1{TripleKind::Hoare, ctx, random_pred(2), random_pred(2), random_cmd(2)};
            Triple p2{TripleKind::Hoare, ctx, p1.post, random_pred(2), random_cmd(2)};
            Triple conclusion{TripleKind::Hoare, ctx, p1.pre, p2.post, cmd_seq(p1.cmd, p2.cmd)};
            if (!verify_hoare_rule_instance(HoareRule::Seq, {p1, p2}, conclusion, sig, interp).holds)
                return "(seq) violated";
        }
        {
            PredPtr guard = random_pred(1), pre = random_pred(2), post = random_pred(2);
            Triple p1{TripleKind::Hoare, ctx, pred_and(pre, guard), post, random_cmd(2)};
            Triple p2{TripleKind::Hoare, ctx, pred_and(pre, negate(guard)), post, random_cmd(2)};
            Triple conclusion{TripleKind::Hoare, ctx, pre, post, cmd_if(guard, p1.cmd, p2.cmd)};
            if (!verify_hoare_rule_instance(HoareRule::If, {p1, p2}, conclusion, sig, interp).holds)
                return "(if) violated";
        }
        {
            PredPtr guard = random_pred(1), invariant = random_pred(2);
            Triple premise{TripleKind::Hoare, ctx, pred_and(invariant, guard), invariant, random_cmd(2)};
            Triple conclusion{TripleKind::Hoare, ctx, invariant, pred_and(invariant, negate(guard)),
                              cmd_while(guard, premise.cmd)};
            if (!verify_hoare_rule_instance(HoareRule::While, {premise}, conclusion, sig, interp).holds)
                return "(while) violated";
        }
    }

    // substitution lemma on 100 random (P, t, x)
    for (int k = 0; k < 100; ++k) {
        Interpretation interp = mod_interp(2 + static_cast<int>(rng() % 2), sig);
        PredPtr p = random_pred(2);
        ExprPtr t = random_expr(2);
        std::string x = rng() % 2 ? "x" : "y";
        FinRel direct = eval(encode_pred(ctx, substitute(ctx, sig, p, t, x), sig), interp);
        FinRel routed = eval(tape_seq(encode_cmd(ctx, cmd_assign(x, t), sig), encode_pred(ctx, p, sig)), interp);
        if (direct != routed) return "substitution lemma fails";
    }
    return {};
}

std::string rhl_frame_rule() {
    ProgramSignature sig = mod_signature();
    Interpretation interp = mod_interp(2, sig);
    Context c1 = parse_context("x:A, w:A"), c2 = parse_context("y:A");
    std::string agree = "(eq0(x) && eq0(y)) || (eq1(x) && eq1(y))";
    Quadruple base = parse_quadruple("rel {" + agree + "} x := s(x) ~ y := s(y) {" + agree + "}", c1, c2);
    if (!check_quadruple(base, sig, interp).holds) return "base quadruple fails";
    PredPtr frame = parse_pred("eq0(w)");
    Quadruple strengthened = base;
    strengthened.pre = pred_and(base.pre, frame);
    strengthened.post = pred_and(base.post, frame);
    if (!check_quadruple(strengthened, sig, interp).holds) return "strengthened quadruple fails";
    Quadruple mutated = strengthened;
    mutated.c1 = parse_program("x := s(x); w := s(w)");
    CheckReport rep = check_quadruple(mutated, sig, interp);
    if (rep.holds) return "mutated quadruple not refuted";
    if (!rep.witness) return "no witness reported";
    return {};
}

std::string countermodel_search() {
    Signature sig;
    sig.add_sort("A");
    sig.add_symbol("R", Monomial{"A"}, Monomial{"A"});
    TapePtr r = tape_embed(circ_gen(sig, "R"));
    SearchOptions opts;
    opts.max_size = 2;
    auto counter = search_countermodel(tape_seq(r, r), r, sig, opts);
    if (!counter) return "R;R <= R not refuted";
    Carrier x = counter->carrier(Monomial{"A"});
    FinRel want(x, x);
    want.insert(0, 1);
    want.insert(1, 0);
    if (counter->sizes.at("A") != 2 || counter->relation("R") != want) return "non-canonical witness";

    SearchOptions deeper;
    deeper.max_size = 3;
    if (search_countermodel(tape_id(Monomial{"A"}), derived_star(r), sig, deeper)) return "id <= R* refuted";

    // sampling determinism
    Signature sig2 = sig;
    sig2.add_symbol("S", Monomial{"A"}, Monomial{"A"});
    TapePtr s = tape_embed(circ_gen(sig2, "S"));
    SearchOptions sampled;
    sampled.max_size = 3;
    sampled.budget = 100;
    sampled.seed = 4242;
    auto a = search_countermodel(tape_seq(r, s), tape_seq(s, r), sig2, sampled);
    auto b = search_countermodel(tape_seq(r, s), tape_seq(s, r), sig2, sampled);
    if (!a || !b) return "sampled search found nothing";
    if (!(a->sizes == b->sizes && a->relation("R") == b->relation("R") && a->relation("S") == b->relation("S")))
        return "sampled search is not deterministic";
    return {};
}

std::string addition_demo() {
    Signature sig;
    sig.add_sort("A");
    sig.add_symbol("s", Monomial{"A"}, Monomial{"A"});
    sig.add_symbol("z", Monomial::unit(), Monomial{"A"});
    const int n = 5;
    Interpretation interp;
    interp.signature = sig;
    interp.sizes["A"] = n + 1;
    Carrier x = interp.carrier(Monomial{"A"});
    FinRel succ(x, x);
    for (int k = 0; k < n; ++k) succ.insert(k, k + 1);
    interp.relations.emplace("s", std::move(succ));
    FinRel zrel(Carrier::unit(interp.sizes), x);
    zrel.insert(0, 0);
    interp.relations.emplace("z", std::move(zrel));

    TapePtr succ_tape = tape_embed(circ_gen(sig, "s"));
    TapePtr zero_tape = tape_embed(circ_gen(sig, "z"));
    TapePtr body = tensor_tapes(derived_converse(succ_tape), succ_tape);
    TapePtr exit = tensor_tapes(derived_converse(zero_tape), tape_id(Monomial{"A"}));
    TapePtr add = tape_seq(derived_star(body), exit);

    Carrier aa = interp.carrier(Monomial{"A", "A"});
    FinRel want(aa, x);
    for (int a = 0; a <= n; ++a)
        for (int b = 0; b <= n; ++b)
            if (a + b <= n) want.insert(aa.index_of(0, std::vector<int>{a, b}), a + b);
    if (eval(add, interp) != want) return "addition value wrong";

    TapePtr lhs1 = tape_seq(tensor_tapes(zero_tape, tape_id(Monomial{"A"})), add);
    if (eval(lhs1, interp) != FinRel::identity(x)) return "add(0,y) != y on the truncation";
    TapePtr lhs2 = tape_seq(tensor_tapes(succ_tape, tape_id(Monomial{"A"})), add);
    TapePtr rhs2 = tape_seq(add, succ_tape);
    if (eval(lhs2, interp) != eval(rhs2, interp)) return "add(s x,y) != s(add(x,y)) on the truncation";
    return {};
}

}  // namespace

int main() {
    criterion(1, "tape, Cartesian-bicategory and coherence axioms hold exactly (500 samples, size <= 4)",
              axiom_suite);
    criterion(2, "Kozen star laws hold for relations (500 samples, size <= 5) and boolean matrices (exhaustive 4x4)",
              kozen_suite);
    criterion(3, "fixpoint star equals trace-constructed star (exhaustive size <= 3, random 4-5)",
              star_trace_agreement);
    criterion(4, "matrix normal form: recompose after blocks = id and blockwise order (exhaustive, total size <= 4)",
              matrix_normal_form);
    criterion(5, "coreflexive bijection i/c (exhaustive size <= 4) and COR = TRN&SYM&SV (exhaustive size <= 3)",
              coreflexive_bijection);
    criterion(6, "derived-law tables verified (300 samples, size <= 3)", derived_law_suite);
    criterion(7, "CR encoding soundness on 200 random expressions (depth <= 5, carriers <= 3)", cr_soundness);
    criterion(8, "program-equivalence reproductions (assignments, commutation, guarded loop)", program_equivalences);
    criterion(9, "hoare rule soundness sweep (100 instances per rule) and substitution lemma (100 instances)",
              hoare_soundness_sweep);
    criterion(10, "RHL frame rule: strengthened quadruple holds; mutated instance refuted with witness",
              rhl_frame_rule);
    criterion(11, "countermodel search: canonical refutation of R;R <= R, no refutation of id <= R*, deterministic",
              countermodel_search);
    criterion(12, "addition over truncated naturals: value table and defining equations", addition_demo);

    if (g_failures) {
        std::cout << g_failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all criteria passed\n";
    return 0;
}
