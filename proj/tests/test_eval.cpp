#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "tapes/cr.hpp"
#include "tapes/search.hpp"
#include "tapes/sugar.hpp"

using namespace tapes;

namespace {

Interpretation single_sort(int n, std::map<std::string, std::vector<std::pair<int, int>>> rels = {}) {
    Interpretation interp;
    interp.signature.add_sort("A");
    interp.sizes["A"] = n;
    Carrier x = interp.carrier(Monomial{"A"});
    for (auto& [name, pairs] : rels) {
        interp.signature.add_symbol(name, Monomial{"A"}, Monomial{"A"});
        FinRel r(x, x);
        for (auto [a, b] : pairs) r.insert(a, b);
        interp.relations.emplace(name, std::move(r));
    }
    return interp;
}

FinRel random_rel(std::mt19937_64& rng, const Carrier& dom, const Carrier& cod) {
    FinRel r(dom, cod);
    for (int x = 0; x < dom.size(); ++x)
        for (int y = 0; y < cod.size(); ++y)
            if (rng() & 1) r.insert(x, y);
    return r;
}

TapePtr random_tape(std::mt19937_64& rng, int depth, const Signature& sig);

// random monomial-typed endo tape on A, for sugar coherence sampling
TapePtr random_tape(std::mt19937_64& rng, int depth, const Signature& sig) {
    Monomial a{"A"};
    if (depth == 0 || rng() % 4 == 0) {
        switch (rng() % 3) {
            case 0:
                return tape_id(a);
            case 1:
                return tape_embed(circ_gen(sig, "R"));
            default:
                return tape_embed(circ_gen(sig, "S"));
        }
    }
    switch (rng() % 4) {
        case 0:
            return tape_seq(random_tape(rng, depth - 1, sig), random_tape(rng, depth - 1, sig));
        case 1:
            return derived_join(random_tape(rng, depth - 1, sig), random_tape(rng, depth - 1, sig));
        case 2:
            return derived_meet(random_tape(rng, depth - 1, sig), random_tape(rng, depth - 1, sig));
        default:
            return derived_star(random_tape(rng, depth - 1, sig));
    }
}

}  // namespace

TEST_CASE("evaluation of generators and identities") {
    Interpretation interp = single_sort(2, {{"R", {{0, 1}}}});
    CHECK(eval(tape_embed(circ_gen(interp.signature, "R")), interp) == interp.relation("R"));
    Carrier x = interp.carrier(Monomial{"A"});
    CHECK(eval(tape_id(Monomial{"A"}), interp) == FinRel::identity(x));
    CHECK(eval(tape_id_zero(), interp).count() == 0);
}

TEST_CASE("evaluation is functorial") {
    std::mt19937_64 rng(41);
    Interpretation interp = single_sort(3, {{"R", {}}, {"S", {}}});
    Carrier x = interp.carrier(Monomial{"A"});
    for (int k = 0; k < 100; ++k) {
        interp.relations.at("R") = random_rel(rng, x, x);
        interp.relations.at("S") = random_rel(rng, x, x);
        TapePtr r = tape_embed(circ_gen(interp.signature, "R"));
        TapePtr s = tape_embed(circ_gen(interp.signature, "S"));
        CHECK(eval(tape_seq(r, s), interp) == compose(eval(r, interp), eval(s, interp)));
        CHECK(eval(tape_sum(r, s), interp) == monoidal(MonoidalMode::Sum, eval(r, interp), eval(s, interp)));
    }
}

TEST_CASE("sugar coherence: tensor of tapes evaluates to the product of evaluations") {
    std::mt19937_64 rng(43);
    Interpretation interp = single_sort(2, {{"R", {}}, {"S", {}}});
    Carrier x = interp.carrier(Monomial{"A"});
    for (int k = 0; k < 60; ++k) {
        interp.relations.at("R") = random_rel(rng, x, x);
        interp.relations.at("S") = random_rel(rng, x, x);
        TapePtr t1 = random_tape(rng, 2, interp.signature);
        TapePtr t2 = random_tape(rng, 2, interp.signature);
        CHECK(eval(tensor_tapes(t1, t2), interp) ==
              monoidal(MonoidalMode::Tensor, eval(t1, interp), eval(t2, interp)));
    }
}

TEST_CASE("structural sugar evaluates to the backend generators") {
    std::mt19937_64 rng(47);
    Signature sig;
    sig.add_sort("A");
    sig.add_sort("B");
    for (int k = 0; k < 40; ++k) {
        Interpretation interp;
        interp.signature = sig;
        interp.sizes["A"] = 1 + static_cast<int>(rng() % 3);
        interp.sizes["B"] = 1 + static_cast<int>(rng() % 3);
        Polynomial p;
        int nb = static_cast<int>(rng() % 3);
        for (int b = 0; b <= nb; ++b) {
            Monomial u;
            int nf = static_cast<int>(rng() % 3);
            for (int f = 0; f < nf; ++f) u.factors.push_back(rng() % 2 ? "A" : "B");
            p.summands.push_back(u);
        }
        Carrier cx = interp.carrier(p);
        CHECK(eval(poly_copier(p), interp) == generator(GeneratorKind::Copier, cx));
        CHECK(eval(poly_discharger(p), interp) == generator(GeneratorKind::Discharger, cx));
        CHECK(eval(poly_cocopier(p), interp) == generator(GeneratorKind::Cocopier, cx));
        CHECK(eval(poly_codischarger(p), interp) == generator(GeneratorKind::Codischarger, cx));
        CHECK(eval(poly_diag(p), interp) == generator(GeneratorKind::Diag, cx));
        CHECK(eval(poly_bang(p), interp) == generator(GeneratorKind::Bang, cx));
        CHECK(eval(poly_codiag(p), interp) == generator(GeneratorKind::Codiag, cx));
        CHECK(eval(poly_cobang(p), interp) == generator(GeneratorKind::Cobang, cx));
        Polynomial q{Monomial{"B"}, Monomial{"A", "A"}};
        CHECK(eval(poly_symmetry_tensor(p, q), interp) == symmetry_tensor(cx, interp.carrier(q)));
        CHECK(eval(poly_symmetry_plus(p, q), interp) == symmetry_sum(cx, interp.carrier(q)));
        CHECK(eval(distributor_left_tape(p, q, p), interp) ==
              distributor_left(p, q, p, interp.sizes));
    }
}

TEST_CASE("derived operations evaluate to the lattice operations") {
    std::mt19937_64 rng(53);
    Interpretation interp = single_sort(3, {{"R", {}}, {"S", {}}});
    Carrier x = interp.carrier(Monomial{"A"});
    for (int k = 0; k < 100; ++k) {
        interp.relations.at("R") = random_rel(rng, x, x);
        interp.relations.at("S") = random_rel(rng, x, x);
        TapePtr r = tape_embed(circ_gen(interp.signature, "R"));
        TapePtr s = tape_embed(circ_gen(interp.signature, "S"));
        const FinRel& vr = interp.relation("R");
        const FinRel& vs = interp.relation("S");
        CHECK(eval(derived_meet(r, s), interp) == vr.meet(vs));
        CHECK(eval(derived_join(r, s), interp) == vr.join(vs));
        CHECK(eval(derived_converse(r), interp) == vr.converse());
        CHECK(eval(derived_star(r), interp) == star(vr));
        CHECK(eval(derived_top(Polynomial::of_sort("A"), Polynomial::of_sort("A")), interp) == FinRel::full(x, x));
        CHECK(eval(derived_bot(Polynomial::of_sort("A"), Polynomial::of_sort("A")), interp) ==
              FinRel::empty(x, x));
    }
}

TEST_CASE("converse is an involution on evaluations and reverses composition") {
    std::mt19937_64 rng(59);
    Interpretation interp = single_sort(3, {{"R", {}}, {"S", {}}});
    Carrier x = interp.carrier(Monomial{"A"});
    for (int k = 0; k < 60; ++k) {
        interp.relations.at("R") = random_rel(rng, x, x);
        interp.relations.at("S") = random_rel(rng, x, x);
        TapePtr r = tape_embed(circ_gen(interp.signature, "R"));
        TapePtr s = tape_embed(circ_gen(interp.signature, "S"));
        CHECK(eval(derived_converse(derived_converse(r)), interp) == eval(r, interp));
        CHECK(eval(derived_converse(tape_seq(r, s)), interp) ==
              compose(eval(s, interp).converse(), eval(r, interp).converse()));
    }
}

TEST_CASE("check_inclusion reports least witnesses") {
    Interpretation interp = single_sort(2, {{"R", {{0, 1}}}});
    TapePtr r = tape_embed(circ_gen(interp.signature, "R"));
    CHECK(check_inclusion(r, r, interp).holds);
    CheckReport rep = check_inclusion(tape_id(Monomial{"A"}), r, interp);
    REQUIRE_FALSE(rep.holds);
    CHECK(rep.witness == std::pair{0, 0});
}

TEST_CASE("star of a meet is below the meet of stars") {
    std::mt19937_64 rng(61);
    Interpretation interp = single_sort(3, {{"R", {}}, {"S", {}}});
    Carrier x = interp.carrier(Monomial{"A"});
    for (int k = 0; k < 100; ++k) {
        interp.relations.at("R") = random_rel(rng, x, x);
        interp.relations.at("S") = random_rel(rng, x, x);
        TapePtr r = tape_embed(circ_gen(interp.signature, "R"));
        TapePtr s = tape_embed(circ_gen(interp.signature, "S"));
        CHECK(check_inclusion(derived_star(derived_meet(r, s)),
                              derived_meet(derived_star(r), derived_star(s)), interp)
                  .holds);
    }
}

namespace {

Theory linear_order_theory() {
    Signature sig;
    sig.add_sort("A");
    sig.add_symbol("R", Monomial{"A"}, Monomial{"A"});
    TapePtr r = tape_embed(circ_gen(sig, "R"));
    Polynomial pa = Polynomial::of_sort("A");
    Theory t;
    t.signature = sig;
    t.axioms.push_back({tape_id(Monomial{"A"}), r, false});                                   // reflexive
    t.axioms.push_back({tape_seq(r, r), r, false});                                           // transitive
    t.axioms.push_back({derived_meet(r, derived_converse(r)), tape_id(Monomial{"A"}), false});  // antisymmetric
    t.axioms.push_back({derived_top(pa, pa), derived_join(r, derived_converse(r)), false});     // linear
    return t;
}

}  // namespace

TEST_CASE("linear order theory holds for <= on {0,1,2}") {
    Theory t = linear_order_theory();
    Interpretation interp;
    interp.signature = t.signature;
    interp.sizes["A"] = 3;
    Carrier x = interp.carrier(Monomial{"A"});
    FinRel leq(x, x);
    for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j) leq.insert(i, j);
    interp.relations.emplace("R", leq);
    CHECK(check_theory(t, interp).holds);

    // a single edge fails reflexivity first, with witness (0,0)
    Interpretation bad = interp;
    FinRel edge(x, x);
    edge.insert(0, 1);
    bad.relations.at("R") = edge;
    CheckReport rep = check_theory(t, bad);
    REQUIRE_FALSE(rep.holds);
    CHECK(rep.axiom_index == 0);
    CHECK(rep.witness == std::pair{0, 0});
}

TEST_CASE("functions theory holds for the graph of a function") {
    Signature sig;
    sig.add_sort("A");
    sig.add_symbol("f", Monomial{"A"}, Monomial{"A"});
    TapePtr f = tape_embed(circ_gen(sig, "f"));
    Theory t;
    t.signature = sig;
    t.axioms.push_back({tape_seq(derived_converse(f), f), tape_id(Monomial{"A"}), false});  // single valued
    t.axioms.push_back({tape_id(Monomial{"A"}), tape_seq(f, derived_converse(f)), false});  // total

    Interpretation interp;
    interp.signature = sig;
    interp.sizes["A"] = 2;
    Carrier x = interp.carrier(Monomial{"A"});
    FinRel succ(x, x);
    succ.insert(0, 1);
    succ.insert(1, 0);
    interp.relations.emplace("f", succ);
    CHECK(check_theory(t, interp).holds);

    FinRel partial(x, x);
    partial.insert(0, 1);
    interp.relations.at("f") = partial;
    CHECK_FALSE(check_theory(t, interp).holds);
}

TEST_CASE("countermodel search refutes R;R <= R with the canonical minimal witness") {
    Signature sig;
    sig.add_sort("A");
    sig.add_symbol("R", Monomial{"A"}, Monomial{"A"});
    TapePtr r = tape_embed(circ_gen(sig, "R"));
    SearchOptions opts;
    opts.max_size = 2;
    auto counter = search_countermodel(tape_seq(r, r), r, sig, opts);
    REQUIRE(counter.has_value());
    CHECK(counter->sizes.at("A") == 2);
    Carrier x = counter->carrier(Monomial{"A"});
    FinRel want(x, x);
    want.insert(0, 1);
    want.insert(1, 0);
    CHECK(counter->relation("R") == want);
}

TEST_CASE("valid laws are never refuted") {
    Signature sig;
    sig.add_sort("A");
    sig.add_symbol("R", Monomial{"A"}, Monomial{"A"});
    TapePtr r = tape_embed(circ_gen(sig, "R"));
    SearchOptions opts;
    opts.max_size = 2;

    CHECK_FALSE(search_countermodel(tape_id(Monomial{"A"}), tape_id(Monomial{"A"}), sig, opts).has_value());
    // f n top = f, both directions, exhaustively at size 2
    TapePtr top = derived_top(Polynomial::of_sort("A"), Polynomial::of_sort("A"));
    Theory t;
    t.signature = sig;
    t.axioms.push_back({derived_meet(r, top), r, true});
    CHECK_FALSE(search_theory_countermodel(t, opts).has_value());
    // id <= R* up to size 3
    SearchOptions deeper;
    deeper.max_size = 3;
    CHECK_FALSE(search_countermodel(tape_id(Monomial{"A"}), derived_star(r), sig, deeper).has_value());
}

TEST_CASE("search is deterministic given the seed") {
    Signature sig;
    sig.add_sort("A");
    sig.add_symbol("R", Monomial{"A"}, Monomial{"A"});
    sig.add_symbol("S", Monomial{"A"}, Monomial{"A"});
    TapePtr r = tape_embed(circ_gen(sig, "R"));
    TapePtr s = tape_embed(circ_gen(sig, "S"));
    SearchOptions opts;
    opts.max_size = 3;
    opts.budget = 200;  // forces sampling
    opts.seed = 12345;
    auto a = search_countermodel(tape_seq(r, s), tape_seq(s, r), sig, opts);
    auto b = search_countermodel(tape_seq(r, s), tape_seq(s, r), sig, opts);
    REQUIRE(a.has_value());
    REQUIRE(b.has_value());
    CHECK(a->sizes == b->sizes);
    CHECK(a->relation("R") == b->relation("R"));
    CHECK(a->relation("S") == b->relation("S"));
}

TEST_CASE("CR parsing, spec examples") {
    CRPtr e = parse_cr("R;S* & id");
    REQUIRE(e->kind == CRExpr::Kind::Meet);
    CHECK(e->rhs->kind == CRExpr::Kind::Id);
    REQUIRE(e->lhs->kind == CRExpr::Kind::Seq);
    CHECK(e->lhs->lhs->symbol == "R");
    CHECK(e->lhs->rhs->kind == CRExpr::Kind::Star);

    // postfix operators apply left to right: R^* is (R^)*
    CRPtr a = parse_cr("(R^)*");
    CRPtr b = parse_cr("R^*");
    CHECK(to_string(a) == to_string(b));

    CHECK_THROWS_AS(parse_cr("R &"), SyntaxError);
    CHECK_THROWS_AS(parse_cr("(R"), SyntaxError);
    CHECK_THROWS_AS(parse_cr("R ) S"), SyntaxError);
}

TEST_CASE("CR evaluation, spec examples") {
    CRInterp interp;
    interp.size = 3;
    Carrier x = interp.carrier();
    FinRel r(x, x);
    r.insert(0, 1);
    interp.rho.emplace("R", r);

    CHECK(eval_cr(parse_cr("id"), interp) == FinRel::identity(x));
    CHECK(eval_cr(parse_cr("bot"), interp) == FinRel::empty(x, x));
    CHECK(eval_cr(parse_cr("(R*)^"), interp) == eval_cr(parse_cr("(R^)*"), interp));
    CHECK_THROWS_AS(eval_cr(parse_cr("Q"), interp), UnknownSymbol);
}

TEST_CASE("CR encoding is sound on random expressions") {
    std::mt19937_64 rng(71);
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
        FinRel direct = eval_cr(e, interp);
        FinRel through = eval(encode_cr(e, sig), cr_to_interpretation(interp, sig));
        CHECK(direct == through);
    }
}

namespace {

// The iteration tape: while the top counter is positive, decrement it
// and increment the bottom one; emit the bottom value on exit.
TapePtr addition_tape(const Signature& sig) {
    TapePtr succ = tape_embed(circ_gen(sig, "s"));
    TapePtr zero = tape_embed(circ_gen(sig, "z"));
    TapePtr body = tensor_tapes(derived_converse(succ), succ);
    TapePtr exit = tensor_tapes(derived_converse(zero), tape_id(Monomial{"A"}));
    return tape_seq(derived_star(body), exit);
}

Interpretation truncated_naturals(int n) {
    Interpretation interp;
    interp.signature.add_sort("A");
    interp.signature.add_symbol("s", Monomial{"A"}, Monomial{"A"});
    interp.signature.add_symbol("z", Monomial::unit(), Monomial{"A"});
    interp.sizes["A"] = n + 1;
    Carrier x = interp.carrier(Monomial{"A"});
    FinRel succ(x, x);
    for (int k = 0; k < n; ++k) succ.insert(k, k + 1);
    interp.relations.emplace("s", std::move(succ));
    FinRel zero(Carrier::unit(interp.sizes), x);
    zero.insert(0, 0);
    interp.relations.emplace("z", std::move(zero));
    return interp;
}

}  // namespace

TEST_CASE("addition evaluates to truncated addition") {
    for (int n : {3, 5}) {
        Interpretation interp = truncated_naturals(n);
        TapePtr add = addition_tape(interp.signature);
        FinRel result = eval(add, interp);
        Carrier aa = interp.carrier(Monomial{"A", "A"});
        Carrier a = interp.carrier(Monomial{"A"});
        FinRel want(aa, a);
        for (int x = 0; x <= n; ++x)
            for (int y = 0; y <= n; ++y)
                if (x + y <= n) want.insert(aa.index_of(0, std::vector<int>{x, y}), x + y);
        CHECK(result == want);
    }
}

TEST_CASE("addition satisfies its defining equations on the truncation") {
    Interpretation interp = truncated_naturals(5);
    const Signature& sig = interp.signature;
    TapePtr add = addition_tape(sig);
    TapePtr succ = tape_embed(circ_gen(sig, "s"));
    TapePtr zero = tape_embed(circ_gen(sig, "z"));

    // add(0, y) = y
    TapePtr lhs1 = tape_seq(tensor_tapes(zero, tape_id(Monomial{"A"})), add);
    CHECK(eval(lhs1, interp) == eval(tape_id(Monomial{"A"}), interp));

    // add(s x, y) = s(add(x, y))
    TapePtr lhs2 = tape_seq(tensor_tapes(succ, tape_id(Monomial{"A"})), add);
    TapePtr rhs2 = tape_seq(add, succ);
    CHECK(eval(lhs2, interp) == eval(rhs2, interp));
}
