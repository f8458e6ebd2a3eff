#ifndef TAPES_KLEENE_HPP
#define TAPES_KLEENE_HPP

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "tapes/finrel.hpp"

namespace tapes {

// A (typed) Kleene algebra instance provides objects, hom elements and
// the Kozen operations; the order is a <= b iff join(a,b) = b. The laws
// are checked by the harness below, never assumed.

/// The two-element Kleene algebra on a single object.
struct BoolKA {
    using Object = int;  // single object, value ignored
    using Element = bool;
    static Element zero(Object, Object) { return false; }
    static Element one(Object) { return true; }
    static Element join(Element a, Element b) { return a || b; }
    static Element seq(Element a, Element b) { return a && b; }
    static Element star(Element) { return true; }
    static bool equal(Element a, Element b) { return a == b; }
};

/// Relations as a typed Kleene algebra: objects are carriers.
struct RelKA {
    using Object = Carrier;
    using Element = FinRel;
    static Element zero(const Object& d, const Object& c) { return FinRel::empty(d, c); }
    static Element one(const Object& x) { return FinRel::identity(x); }
    static Element join(const Element& a, const Element& b) { return a.join(b); }
    static Element seq(const Element& a, const Element& b) { return compose(a, b); }
    static Element star(const Element& a) { return tapes::star(a); }
    static bool equal(const Element& a, const Element& b) { return a == b; }
};

/// A deliberately broken instance for harness self-tests: star is the
/// identity map, so "id u f;f* <= f*" fails.
struct BrokenStarKA : RelKA {
    static Element star(const Element& a) { return a; }
};

/// Matrices over a Kleene algebra, the arrows of the biproduct
/// completion. Row objects are the domain list, column objects the
/// codomain list; entry(i,j) is the component from row i to column j,
/// and composition follows diagrammatic order.
template <class KA>
struct KAMatrix {
    std::vector<typename KA::Object> rows, cols;
    std::vector<typename KA::Element> entries;  // row-major, rows.size() x cols.size()

    // decltype(auto) tolerates std::vector<bool>'s proxy references
    decltype(auto) at(std::size_t i, std::size_t j) { return entries[i * cols.size() + j]; }
    decltype(auto) at(std::size_t i, std::size_t j) const { return entries[i * cols.size() + j]; }
};

template <class KA>
KAMatrix<KA> mat_zero(std::vector<typename KA::Object> rows, std::vector<typename KA::Object> cols) {
    KAMatrix<KA> m{std::move(rows), std::move(cols), {}};
    m.entries.reserve(m.rows.size() * m.cols.size());
    for (const auto& r : m.rows)
        for (const auto& c : m.cols) m.entries.push_back(KA::zero(r, c));
    return m;
}

template <class KA>
KAMatrix<KA> mat_identity(std::vector<typename KA::Object> objs) {
    KAMatrix<KA> m = mat_zero<KA>(objs, objs);
    for (std::size_t i = 0; i < m.rows.size(); ++i) m.at(i, i) = KA::one(m.rows[i]);
    return m;
}

template <class KA>
KAMatrix<KA> mat_join(const KAMatrix<KA>& a, const KAMatrix<KA>& b) {
    if (a.rows.size() != b.rows.size() || a.cols.size() != b.cols.size())
        throw ShapeMismatch("matrix join of different shapes");
    KAMatrix<KA> m = a;
    for (std::size_t k = 0; k < m.entries.size(); ++k) m.entries[k] = KA::join(a.entries[k], b.entries[k]);
    return m;
}

template <class KA>
KAMatrix<KA> mat_compose(const KAMatrix<KA>& a, const KAMatrix<KA>& b) {
    if (a.cols.size() != b.rows.size()) throw ShapeMismatch("matrix composition of incompatible shapes");
    KAMatrix<KA> m = mat_zero<KA>(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows.size(); ++i)
        for (std::size_t j = 0; j < b.cols.size(); ++j) {
            auto acc = KA::zero(a.rows[i], b.cols[j]);
            for (std::size_t l = 0; l < a.cols.size(); ++l)
                acc = KA::join(acc, KA::seq(a.at(i, l), b.at(l, j)));
            m.at(i, j) = acc;
        }
    return m;
}

template <class KA>
bool mat_equal(const KAMatrix<KA>& a, const KAMatrix<KA>& b) {
    if (a.rows.size() != b.rows.size() || a.cols.size() != b.cols.size()) return false;
    for (std::size_t k = 0; k < a.entries.size(); ++k)
        if (!KA::equal(a.entries[k], b.entries[k])) return false;
    return true;
}

template <class KA>
KAMatrix<KA> mat_submatrix(const KAMatrix<KA>& m, std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) {
    KAMatrix<KA> s;
    s.rows.assign(m.rows.begin() + r0, m.rows.begin() + r1);
    s.cols.assign(m.cols.begin() + c0, m.cols.begin() + c1);
    for (std::size_t i = r0; i < r1; ++i)
        for (std::size_t j = c0; j < c1; ++j) s.entries.push_back(m.at(i, j));
    return s;
}

/// [A B; C D] from four blocks with matching edges.
template <class KA>
KAMatrix<KA> mat_blocks(const KAMatrix<KA>& a, const KAMatrix<KA>& b, const KAMatrix<KA>& c, const KAMatrix<KA>& d) {
    if (a.rows.size() != b.rows.size() || c.rows.size() != d.rows.size() || a.cols.size() != c.cols.size() ||
        b.cols.size() != d.cols.size())
        throw ShapeMismatch("block matrix of incompatible shapes");
    KAMatrix<KA> m;
    m.rows = a.rows;
    m.rows.insert(m.rows.end(), c.rows.begin(), c.rows.end());
    m.cols = a.cols;
    m.cols.insert(m.cols.end(), b.cols.begin(), b.cols.end());
    for (std::size_t i = 0; i < a.rows.size(); ++i) {
        for (std::size_t j = 0; j < a.cols.size(); ++j) m.entries.push_back(a.at(i, j));
        for (std::size_t j = 0; j < b.cols.size(); ++j) m.entries.push_back(b.at(i, j));
    }
    for (std::size_t i = 0; i < c.rows.size(); ++i) {
        for (std::size_t j = 0; j < c.cols.size(); ++j) m.entries.push_back(c.at(i, j));
        for (std::size_t j = 0; j < d.cols.size(); ++j) m.entries.push_back(d.at(i, j));
    }
    return m;
}

/// Star by the 2x2 block recursion, splitting at ceil(n/2); the base
/// case is the underlying algebra's star.
template <class KA>
KAMatrix<KA> mat_star(const KAMatrix<KA>& m) {
    if (m.rows.size() != m.cols.size()) throw NotSquare("matrix star of a non-square matrix");
    std::size_t n = m.rows.size();
    if (n == 0) return m;
    if (n == 1) {
        KAMatrix<KA> s = m;
        s.entries[0] = KA::star(m.entries[0]);
        return s;
    }
    std::size_t h = (n + 1) / 2;
    KAMatrix<KA> a = mat_submatrix(m, 0, h, 0, h);
    KAMatrix<KA> b = mat_submatrix(m, 0, h, h, n);
    KAMatrix<KA> c = mat_submatrix(m, h, n, 0, h);
    KAMatrix<KA> d = mat_submatrix(m, h, n, h, n);
    KAMatrix<KA> ds = mat_star(d);
    KAMatrix<KA> e = mat_star(mat_join(a, mat_compose(mat_compose(b, ds), c)));
    KAMatrix<KA> tr = mat_compose(mat_compose(e, b), ds);           // top right
    KAMatrix<KA> bl = mat_compose(ds, mat_compose(c, e));           // bottom left
    KAMatrix<KA> br = mat_join(ds, mat_compose(bl, mat_compose(b, ds)));
    return mat_blocks(e, tr, bl, br);
}

struct LawFailure {
    std::string law;
    std::string witness;
};

struct LawReport {
    int checked = 0;
    std::vector<LawFailure> failures;
    bool ok() const { return failures.empty(); }
};

/// Verifies the commutative-monoid laws, the enrichment laws and the
/// four Kleene star laws on sampled elements. The sampler yields endo
/// elements on X as well as heteros X -> Y and Y -> X for the
/// implicational laws.
template <class KA>
LawReport check_ka_laws(const typename KA::Object& x, const typename KA::Object& y,
                        const std::function<typename KA::Element(std::mt19937_64&, const typename KA::Object&,
                                                                 const typename KA::Object&)>& sample,
                        int samples, std::uint64_t seed) {
    using E = typename KA::Element;
    LawReport rep;
    std::mt19937_64 rng(seed);
    auto leq = [](const E& a, const E& b) { return KA::equal(KA::join(a, b), b); };
    auto fail = [&](const std::string& law) { rep.failures.push_back({law, "sample " + std::to_string(rep.checked)}); };
    for (int k = 0; k < samples; ++k) {
        ++rep.checked;
        E f = sample(rng, x, x), g = sample(rng, x, x), h = sample(rng, x, x);
        E r = sample(rng, x, y), l = sample(rng, y, x);
        E zero = KA::zero(x, x), id = KA::one(x);
        // commutative monoid with idempotent join
        if (!KA::equal(KA::join(KA::join(f, g), h), KA::join(f, KA::join(g, h)))) fail("(f|g)|h = f|(g|h)");
        if (!KA::equal(KA::join(f, g), KA::join(g, f))) fail("f|g = g|f");
        if (!KA::equal(KA::join(f, zero), f)) fail("f|0 = f");
        if (!KA::equal(KA::join(f, f), f)) fail("f|f = f");
        // enrichment
        if (!KA::equal(KA::seq(KA::join(f, g), h), KA::join(KA::seq(f, h), KA::seq(g, h)))) fail("(f|g);h = f;h|g;h");
        if (!KA::equal(KA::seq(h, KA::join(f, g)), KA::join(KA::seq(h, f), KA::seq(h, g)))) fail("h;(f|g) = h;f|h;g");
        if (!KA::equal(KA::seq(f, zero), zero) || !KA::equal(KA::seq(zero, f), zero)) fail("f;0 = 0 = 0;f");
        // Kleene star laws
        E fs = KA::star(f);
        if (!leq(KA::join(id, KA::seq(f, fs)), fs)) fail("id | f;f* <= f*");
        if (!leq(KA::join(id, KA::seq(fs, f)), fs)) fail("id | f*;f <= f*");
        if (leq(KA::seq(f, r), r) && !leq(KA::seq(fs, r), r)) fail("f;r <= r => f*;r <= r");
        if (leq(KA::seq(l, f), l) && !leq(KA::seq(l, fs), l)) fail("l;f <= l => l;f* <= l");
        // derived: unfoldings are equalities, stars compose laxly
        if (!KA::equal(KA::join(id, KA::seq(f, fs)), fs) || !KA::equal(KA::join(id, KA::seq(fs, f)), fs))
            fail("id | f;f* = f* = id | f*;f");
        if (!leq(KA::seq(fs, KA::star(g)), KA::star(KA::join(f, g)))) fail("f*;g* <= (f|g)*");
    }
    return rep;
}

}  // namespace tapes

#endif
