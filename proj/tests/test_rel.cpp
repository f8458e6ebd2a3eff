#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "tapes/kleene.hpp"
#include "tapes/laws.hpp"

using namespace tapes;

namespace {

SortSizes sz(int a, int b = 0, int c = 0) {
    SortSizes m{{"A", a}};
    if (b) m["B"] = b;
    if (c) m["C"] = c;
    return m;
}

Carrier set_of(int n) { return Carrier(Polynomial::of_sort("A"), sz(n)); }

FinRel rel_of(const Carrier& dom, const Carrier& cod, std::initializer_list<std::pair<int, int>> ps) {
    FinRel r(dom, cod);
    for (auto [x, y] : ps) r.insert(x, y);
    return r;
}

FinRel random_rel(std::mt19937_64& rng, const Carrier& dom, const Carrier& cod) {
    FinRel r(dom, cod);
    for (int x = 0; x < dom.size(); ++x)
        for (int y = 0; y < cod.size(); ++y)
            if (rng() & 1) r.insert(x, y);
    return r;
}

}  // namespace

TEST_CASE("carrier enumeration is branch-major then lexicographic") {
    // (A + B*C) with |A|=2, |B|=2, |C|=3
    SortSizes sizes{{"A", 2}, {"B", 2}, {"C", 3}};
    Carrier carrier(Polynomial{Monomial{"A"}, Monomial{"B", "C"}}, sizes);
    CHECK(carrier.size() == 2 + 2 * 3);
    CHECK(carrier.branch_of(0) == 0);
    CHECK(carrier.branch_of(2) == 1);
    CHECK(carrier.tuple_of(1) == std::vector<int>{1});
    CHECK(carrier.tuple_of(2) == std::vector<int>{0, 0});
    CHECK(carrier.tuple_of(3) == std::vector<int>{0, 1});
    CHECK(carrier.tuple_of(7) == std::vector<int>{1, 2});
    std::vector<int> t{1, 2};
    CHECK(carrier.index_of(1, t) == 7);
    CHECK(Carrier::zero(sizes).size() == 0);
    CHECK(Carrier::unit(sizes).size() == 1);
}

TEST_CASE("composition examples") {
    Carrier x = set_of(2), y = set_of(3), z = set_of(6);
    FinRel r = rel_of(x, y, {{0, 1}, {1, 2}});
    FinRel s = rel_of(y, z, {{1, 5}});
    CHECK(compose(r, s) == rel_of(x, z, {{0, 5}}));
    CHECK(compose(r, FinRel::identity(y)) == r);
    CHECK(compose(r, FinRel::empty(y, z)) == FinRel::empty(x, z));
    CHECK_THROWS_AS(compose(r, rel_of(x, y, {})), CarrierMismatch);
}

TEST_CASE("monoidal products") {
    Carrier x = set_of(2);
    CHECK(monoidal(MonoidalMode::Tensor, FinRel::identity(x), FinRel::identity(x)) ==
          FinRel::identity(x.tensor(x)));
    FinRel r = rel_of(x, x, {{0, 1}});
    FinRel tagged = monoidal(MonoidalMode::Sum, FinRel::empty(x, x), r);
    CHECK(tagged == rel_of(x.sum(x), x.sum(x), {{2, 3}}));
    // {(0,1)} x {(a,b)} = {((0,a),(1,b))}
    Carrier two = set_of(2);
    FinRel s = rel_of(two, two, {{0, 1}});
    FinRel prod = monoidal(MonoidalMode::Tensor, r, s);
    CHECK(prod == rel_of(x.tensor(two), x.tensor(two), {{0 * 2 + 0, 1 * 2 + 1}}));
}

TEST_CASE("star examples") {
    Carrier x = set_of(3);
    CHECK(star(FinRel::empty(x, x)) == FinRel::identity(x));
    FinRel chain = rel_of(x, x, {{0, 1}, {1, 2}});
    FinRel expect = FinRel::identity(x).join(rel_of(x, x, {{0, 1}, {1, 2}, {0, 2}}));
    CHECK(star(chain) == expect);
    Carrier two = set_of(2);
    CHECK(star(FinRel::full(two, two)) == FinRel::full(two, two));
    CHECK_THROWS_AS(star(rel_of(x, two, {})), NotEndo);
}

TEST_CASE("trace on handmade blocks") {
    Carrier s1 = set_of(1);
    SortSizes sizes{{"A", 1}, {"B", 1}, {"C", 1}};
    Carrier s(Polynomial::of_sort("A"), sizes);
    Carrier x(Polynomial::of_sort("B"), sizes);
    Carrier y(Polynomial::of_sort("C"), sizes);
    // f : S+X -> S+Y with pairs {((s),(y)), ((x),(s))}; its trace is {(x,y)}
    FinRel f = rel_of(s.sum(x), s.sum(y), {{0, 1}, {1, 0}});
    CHECK(trace(s, f) == rel_of(x, y, {{0, 0}}));
    // trace of the identity drops to the identity
    SortSizes mixed{{"A", 1}, {"B", 2}};
    Carrier small(Polynomial::of_sort("A"), mixed);
    Carrier big(Polynomial::of_sort("B"), mixed);
    CHECK(trace(small, FinRel::identity(small.sum(big))) == FinRel::identity(big));
    // yanking
    CHECK(trace(big, symmetry_sum(big, big)) == FinRel::identity(big));
    CHECK_THROWS_AS(trace(big, FinRel::identity(small.sum(big))), TraceShapeMismatch);
    (void)s1;
}

TEST_CASE("blocks decompose and recompose") {
    std::mt19937_64 rng(11);
    Carrier s = set_of(2);
    SortSizes sizes{{"A", 2}, {"B", 2}, {"C", 2}, {"D", 2}};
    Carrier x(Polynomial::of_sort("B"), sizes);
    Carrier t(Polynomial::of_sort("C"), sizes);
    Carrier y(Polynomial::of_sort("D"), sizes);
    Carrier sx = Carrier(Polynomial::of_sort("A"), sizes).sum(x);
    Carrier ty = t.sum(y);
    Carrier sa(Polynomial::of_sort("A"), sizes);

    Blocks b = blocks(FinRel::identity(sa.sum(x)), sa, x, sa, x);
    CHECK(b.st == FinRel::identity(sa));
    CHECK(b.xy == FinRel::identity(x));
    CHECK(b.sy == FinRel::empty(sa, x));
    CHECK(b.xt == FinRel::empty(x, sa));

    for (int k = 0; k < 200; ++k) {
        FinRel f = random_rel(rng, sx, ty);
        Blocks parts = blocks(f, sa, x, t, y);
        CHECK(recompose(parts) == f);
        FinRel g = random_rel(rng, sx, ty);
        Blocks gparts = blocks(g, sa, x, t, y);
        bool blockwise = parts.st.subset_of(gparts.st) && parts.sy.subset_of(gparts.sy) &&
                         parts.xt.subset_of(gparts.xt) && parts.xy.subset_of(gparts.xy);
        CHECK(f.subset_of(g) == blockwise);
    }
    (void)s;
}

TEST_CASE("the eight generators match their set-theoretic definitions") {
    Carrier x = set_of(2);
    CHECK(generator(GeneratorKind::Copier, x) == rel_of(x, x.tensor(x), {{0, 0}, {1, 3}}));
    Carrier one = Carrier::unit(sz(2));
    CHECK(generator(GeneratorKind::Discharger, x) == rel_of(x, one, {{0, 0}, {1, 0}}));
    CHECK(generator(GeneratorKind::Cocopier, x) == generator(GeneratorKind::Copier, x).converse());
    CHECK(generator(GeneratorKind::Codischarger, x) == generator(GeneratorKind::Discharger, x).converse());
    CHECK(generator(GeneratorKind::Diag, x) == rel_of(x, x.sum(x), {{0, 0}, {0, 2}, {1, 1}, {1, 3}}));
    CHECK(generator(GeneratorKind::Codiag, x) == generator(GeneratorKind::Diag, x).converse());
    CHECK(generator(GeneratorKind::Bang, x).count() == 0);
    CHECK(generator(GeneratorKind::Cobang, x).count() == 0);
    CHECK(generator(GeneratorKind::Bang, x) == generator(GeneratorKind::Cobang, x).converse());
}

TEST_CASE("operations are total on empty carriers") {
    Carrier e = set_of(0);
    CHECK(FinRel::identity(e).count() == 0);
    CHECK(star(FinRel::empty(e, e)) == FinRel::identity(e));
    CHECK(generator(GeneratorKind::Copier, e).count() == 0);
    CHECK(trace(e, FinRel::identity(e.sum(e))) == FinRel::identity(e));
}

TEST_CASE("arrow properties, spec examples") {
    Carrier two = set_of(2), three = set_of(3);
    FinRel func = rel_of(three, two, {{0, 0}, {1, 1}, {2, 0}});
    CHECK(arrow_property(func, ArrowProperty::SV));
    CHECK(arrow_property(func, ArrowProperty::TOT));
    CHECK_FALSE(arrow_property(func, ArrowProperty::INJ));
    CHECK(arrow_property(func, ArrowProperty::SUR));

    FinRel point = rel_of(two, two, {{0, 0}});
    CHECK(arrow_property(point, ArrowProperty::COR));
    CHECK(arrow_property(point, ArrowProperty::TRN));
    CHECK(arrow_property(point, ArrowProperty::SYM));
    CHECK(arrow_property(point, ArrowProperty::SV));
    CHECK_FALSE(arrow_property(point, ArrowProperty::REF));

    CHECK_FALSE(arrow_property(FinRel::full(two, two), ArrowProperty::SV));
    CHECK_THROWS_AS(arrow_property(func, ArrowProperty::COR), NotEndo);
}

TEST_CASE("direct properties agree with the adjoint characterisations") {
    std::mt19937_64 rng(5);
    for (int k = 0; k < 300; ++k) {
        int n = 1 + static_cast<int>(rng() % 4), m = 1 + static_cast<int>(rng() % 4);
        SortSizes sizes{{"A", n}, {"B", m}};
        Carrier x(Polynomial::of_sort("A"), sizes), y(Polynomial::of_sort("B"), sizes);
        FinRel f = random_rel(rng, x, y);
        FinRel fo = f.converse();
        CHECK(arrow_property(f, ArrowProperty::SV) == compose(fo, f).subset_of(FinRel::identity(y)));
        CHECK(arrow_property(f, ArrowProperty::TOT) == FinRel::identity(x).subset_of(compose(f, fo)));
        CHECK(arrow_property(f, ArrowProperty::INJ) == compose(f, fo).subset_of(FinRel::identity(x)));
        CHECK(arrow_property(f, ArrowProperty::SUR) == FinRel::identity(y).subset_of(compose(fo, f)));
    }
}

TEST_CASE("coreflexives are exactly the transitive symmetric single-valued arrows") {
    for (int n = 0; n <= 3; ++n) {
        Carrier x = set_of(n);
        int bits = n * n;
        for (unsigned long long mask = 0; mask < (1ull << bits); ++mask) {
            FinRel r = FinRel::from_mask(x, x, mask);
            bool trio = arrow_property(r, ArrowProperty::TRN) && arrow_property(r, ArrowProperty::SYM) &&
                        arrow_property(r, ArrowProperty::SV);
            CHECK(arrow_property(r, ArrowProperty::COR) == trio);
        }
    }
}

TEST_CASE("distributor is a bijective block permutation") {
    SortSizes sizes{{"A", 2}, {"B", 3}, {"C", 2}};
    Polynomial p{Monomial{"A"}, Monomial{"B"}};
    Polynomial q{Monomial{"C"}};
    Polynomial r{Monomial{"A", "B"}};
    FinRel dl = distributor_left(p, q, r, sizes);
    CHECK(arrow_property(dl, ArrowProperty::SV));
    CHECK(arrow_property(dl, ArrowProperty::TOT));
    CHECK(arrow_property(dl, ArrowProperty::INJ));
    CHECK(arrow_property(dl, ArrowProperty::SUR));
    CHECK(compose(dl, distributor_left_inv(p, q, r, sizes)) == FinRel::identity(dl.dom()));
}

TEST_CASE("kleene law suites pass on relations") {
    for (const char* suite : {"kozen", "star-trace", "cb-axioms", "fb-axioms", "trace-axioms", "uniformity",
                              "coherence", "cb-derived", "kc-derived", "matrix"}) {
        auto checks = run_law_suite(suite, 120, 99);
        for (const LawCheck& c : checks) {
            INFO(suite, ": ", c.name, " -- ", c.witness);
            CHECK(c.failures == 0);
        }
    }
}

TEST_CASE("star via trace agrees exhaustively at size <= 3") {
    for (int n = 0; n <= 3; ++n) {
        Carrier x = set_of(n);
        int bits = n * n;
        for (unsigned long long mask = 0; mask < (1ull << bits); ++mask) {
            FinRel r = FinRel::from_mask(x, x, mask);
            CHECK(star(r) == star_via_trace(r));
        }
    }
}

TEST_CASE("matrix operations, spec examples") {
    std::vector<int> two(2, 0);
    KAMatrix<BoolKA> id2 = mat_identity<BoolKA>(two);
    CHECK(id2.at(0, 0));
    CHECK_FALSE(id2.at(0, 1));

    KAMatrix<BoolKA> one{{0}, {0}, {true}};
    KAMatrix<BoolKA> zero1{{0}, {0}, {false}};
    CHECK(mat_equal(mat_compose(one, zero1), zero1));

    KAMatrix<BoolKA> edge{two, two, {false, true, false, false}};
    KAMatrix<BoolKA> closed = mat_star(edge);
    CHECK(closed.at(0, 0));
    CHECK(closed.at(0, 1));
    CHECK_FALSE(closed.at(1, 0));
    CHECK(closed.at(1, 1));

    KAMatrix<BoolKA> z2 = mat_zero<BoolKA>(two, two);
    CHECK(mat_equal(mat_star(z2), id2));
    CHECK(mat_equal(mat_star(one), one));
    CHECK_THROWS_AS(mat_star(mat_zero<BoolKA>(two, {0})), NotSquare);
    CHECK_THROWS_AS(mat_compose(edge, mat_identity<BoolKA>({0})), ShapeMismatch);
}

TEST_CASE("boolean Kleene algebra laws hold exhaustively in spirit") {
    auto sampler = [](std::mt19937_64& rng, const int&, const int&) { return (rng() & 1) != 0; };
    LawReport rep = check_ka_laws<BoolKA>(0, 0, sampler, 200, 3);
    CHECK(rep.ok());
}

TEST_CASE("relation Kleene algebra laws hold on samples") {
    Carrier x = set_of(3), y = set_of(2);
    auto sampler = [](std::mt19937_64& rng, const Carrier& d, const Carrier& c) {
        FinRel r(d, c);
        for (int i = 0; i < d.size(); ++i)
            for (int j = 0; j < c.size(); ++j)
                if (rng() & 1) r.insert(i, j);
        return r;
    };
    LawReport rep = check_ka_laws<RelKA>(x, y, sampler, 500, 17);
    CHECK(rep.ok());
    CHECK(rep.checked == 500);
}

TEST_CASE("a broken star is caught with the correct law named") {
    Carrier x = set_of(2), y = set_of(2);
    auto sampler = [](std::mt19937_64& rng, const Carrier& d, const Carrier& c) {
        FinRel r(d, c);
        for (int i = 0; i < d.size(); ++i)
            for (int j = 0; j < c.size(); ++j)
                if (rng() & 1) r.insert(i, j);
        return r;
    };
    LawReport rep = check_ka_laws<BrokenStarKA>(x, y, sampler, 200, 23);
    REQUIRE_FALSE(rep.ok());
    bool found = false;
    for (const LawFailure& f : rep.failures) found = found || f.law == "id | f;f* <= f*";
    CHECK(found);
}

TEST_CASE("matrix star equals relational closure up to 5x5") {
    std::mt19937_64 rng(31);
    for (int k = 0; k < 200; ++k) {
        int n = 1 + static_cast<int>(rng() % 5);
        Carrier x = set_of(n);
        KAMatrix<BoolKA> m{std::vector<int>(n, 0), std::vector<int>(n, 0), {}};
        FinRel r(x, x);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                bool bit = (rng() & 1) != 0;
                m.entries.push_back(bit);
                if (bit) r.insert(i, j);
            }
        KAMatrix<BoolKA> ms = mat_star(m);
        FinRel rs = star(r);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) CHECK(ms.at(i, j) == rs.contains(i, j));
    }
}
