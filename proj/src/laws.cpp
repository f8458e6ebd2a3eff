#include "tapes/laws.hpp"

#include <functional>
#include <random>

#include "tapes/interp.hpp"
#include "tapes/kleene.hpp"
#include "tapes/sugar.hpp"

namespace tapes {

namespace {

// Sampling helpers: abstract finite sets are carriers over scratch
// sorts a..f with independently chosen sizes.
struct Sampler {
    std::mt19937_64 rng;
    SortSizes sizes;

    explicit Sampler(std::uint64_t seed) : rng(seed) {}

    int size_up_to(int hi, bool allow_empty = true) {
        int lo = allow_empty ? 0 : 1;
        return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    void fresh_sizes(int max_size) {
        sizes.clear();
        for (char c = 'a'; c <= 'f'; ++c) sizes[std::string(1, c)] = size_up_to(max_size);
    }

    Carrier set(char sort) { return Carrier(Polynomial::of_sort(std::string(1, sort)), sizes); }
    Carrier unit() { return Carrier::unit(sizes); }
    Carrier zero() { return Carrier::zero(sizes); }

    FinRel rel(const Carrier& dom, const Carrier& cod) {
        FinRel r(dom, cod);
        for (int x = 0; x < dom.size(); ++x)
            for (int y = 0; y < cod.size(); ++y)
                if (rng() & 1) r.insert(x, y);
        return r;
    }

    FinRel endo(const Carrier& x) { return rel(x, x); }

    Polynomial poly(int max_branches, int max_factors) {
        Polynomial p;
        int nb = size_up_to(max_branches);
        for (int b = 0; b < nb; ++b) {
            Monomial u;
            int nf = size_up_to(max_factors);
            for (int f = 0; f < nf; ++f) u.factors.push_back(std::string(1, static_cast<char>('a' + rng() % 3)));
            p.summands.push_back(std::move(u));
        }
        return p;
    }
};

using LawFn = std::function<std::string(Sampler&)>;  // empty string = pass, "skip" handled by caller

constexpr const char* kSkip = "\x01skip";

struct Law {
    std::string name;
    LawFn fn;
};

std::string verdict(bool ok, const std::string& what) { return ok ? std::string() : what; }

FinRel copier(const Carrier& x) { return generator(GeneratorKind::Copier, x); }
FinRel discharger(const Carrier& x) { return generator(GeneratorKind::Discharger, x); }
FinRel cocopier(const Carrier& x) { return generator(GeneratorKind::Cocopier, x); }
FinRel codischarger(const Carrier& x) { return generator(GeneratorKind::Codischarger, x); }
FinRel diag(const Carrier& x) { return generator(GeneratorKind::Diag, x); }
FinRel bang(const Carrier& x) { return generator(GeneratorKind::Bang, x); }
FinRel codiag(const Carrier& x) { return generator(GeneratorKind::Codiag, x); }
FinRel cobang(const Carrier& x) { return generator(GeneratorKind::Cobang, x); }
FinRel ten(const FinRel& a, const FinRel& b) { return monoidal(MonoidalMode::Tensor, a, b); }
FinRel oplus(const FinRel& a, const FinRel& b) { return monoidal(MonoidalMode::Sum, a, b); }
FinRel id(const Carrier& x) { return FinRel::identity(x); }

std::vector<Law> cb_axiom_laws() {
    return {
        {"copier associativity", [](Sampler& s) {
             Carrier x = s.set('a');
             return verdict(compose(copier(x), ten(id(x), copier(x))) == compose(copier(x), ten(copier(x), id(x))),
                            "copy;(id*copy) != copy;(copy*id)");
         }},
        {"copier unit", [](Sampler& s) {
             Carrier x = s.set('a');
             return verdict(compose(copier(x), ten(discharger(x), id(x))) == id(x), "copy;(discard*id) != id");
         }},
        {"copier commutativity", [](Sampler& s) {
             Carrier x = s.set('a');
             return verdict(compose(copier(x), symmetry_tensor(x, x)) == copier(x), "copy;swap != copy");
         }},
        {"cocopier associativity", [](Sampler& s) {
             Carrier x = s.set('a');
             return verdict(compose(ten(id(x), cocopier(x)), cocopier(x)) == compose(ten(cocopier(x), id(x)), cocopier(x)),
                            "(id*cocopy);cocopy != (cocopy*id);cocopy");
         }},
        {"cocopier unit", [](Sampler& s) {
             Carrier x = s.set('a');
             return verdict(compose(ten(codischarger(x), id(x)), cocopier(x)) == id(x), "(codischarge*id);cocopy != id");
         }},
        {"cocopier commutativity", [](Sampler& s) {
             Carrier x = s.set('a');
             return verdict(compose(symmetry_tensor(x, x), cocopier(x)) == cocopier(x), "swap;cocopy != cocopy");
         }},
        {"tensor coherence of copier", [](Sampler& s) {
             Carrier x = s.set('a'), y = s.set('b');
             FinRel lhs = copier(x.tensor(y));
             FinRel rhs = compose(ten(copier(x), copier(y)), ten(ten(id(x), symmetry_tensor(x, y)), id(y)));
             return verdict(lhs == rhs, "copier on a product is not coherent");
         }},
        {"tensor coherence of discharger", [](Sampler& s) {
             Carrier x = s.set('a'), y = s.set('b');
             return verdict(discharger(x.tensor(y)) == compose(ten(discharger(x), discharger(y)),
                                                               cocopier(s.unit())),
                            "discharger on a product is not coherent");
         }},
        {"lax naturality of copier", [](Sampler& s) {
             Carrier x = s.set('a'), y = s.set('b');
             FinRel f = s.rel(x, y);
             return verdict(compose(f, copier(y)).subset_of(compose(copier(x), ten(f, f))),
                            "f;copy not below copy;(f*f)");
         }},
        {"lax naturality of discharger", [](Sampler& s) {
             Carrier x = s.set('a'), y = s.set('b');
             FinRel f = s.rel(x, y);
             return verdict(compose(f, discharger(y)).subset_of(discharger(x)), "f;discard not below discard");
         }},
        {"special Frobenius", [](Sampler& s) {
             Carrier x = s.set('a');
             return verdict(compose(copier(x), cocopier(x)) == id(x), "copy;cocopy != id");
         }},
        {"Frobenius", [](Sampler& s) {
             Carrier x = s.set('a');
             FinRel lhs = compose(ten(id(x), copier(x)), ten(cocopier(x), id(x)));
             FinRel rhs = compose(cocopier(x), copier(x));
             return verdict(lhs == rhs, "(id*copy);(cocopy*id) != cocopy;copy");
         }},
        {"copier adjointness", [](Sampler& s) {
             Carrier x = s.set('a');
             bool a = id(x).subset_of(compose(copier(x), cocopier(x)));
             bool b = compose(cocopier(x), copier(x)).subset_of(id(x.tensor(x)));
             return verdict(a && b, "copy -| cocopy fails");
         }},
        {"discharger adjointness", [](Sampler& s) {
             Carrier x = s.set('a');
             bool a = id(x).subset_of(compose(discharger(x), codischarger(x)));
             bool b = compose(codischarger(x), discharger(x)).subset_of(id(s.unit()));
             return verdict(a && b, "discard -| codischarge fails");
         }},
    };
}

std::vector<Law> fb_axiom_laws() {
    return {
        {"codiag associativity", [](Sampler& s) {
             Carrier x = s.set('a');
             FinRel lhs = compose(oplus(codiag(x), id(x)), codiag(x));
             FinRel rhs = compose(oplus(id(x), codiag(x)), codiag(x));
             return verdict(lhs == rhs, "(codiag+id);codiag != (id+codiag);codiag");
         }},
        {"codiag unit", [](Sampler& s) {
             Carrier x = s.set('a');
             return verdict(compose(oplus(cobang(x), id(x)), codiag(x)) == id(x), "(cobang+id);codiag != id");
         }},
        {"codiag commutativity", [](Sampler& s) {
             Carrier x = s.set('a');
             return verdict(compose(symmetry_sum(x, x), codiag(x)) == codiag(x), "swap;codiag != codiag");
         }},
        {"diag associativity", [](Sampler& s) {
             Carrier x = s.set('a');
             FinRel lhs = compose(diag(x), oplus(diag(x), id(x)));
             FinRel rhs = compose(diag(x), oplus(id(x), diag(x)));
             return verdict(lhs == rhs, "diag;(diag+id) != diag;(id+diag)");
         }},
        {"diag unit", [](Sampler& s) {
             Carrier x = s.set('a');
             return verdict(compose(diag(x), oplus(bang(x), id(x))) == id(x), "diag;(bang+id) != id");
         }},
        {"diag commutativity", [](Sampler& s) {
             Carrier x = s.set('a');
             return verdict(compose(diag(x), symmetry_sum(x, x)) == diag(x), "diag;swap != diag");
         }},
        {"sum coherence of codiag", [](Sampler& s) {
             Carrier x = s.set('a'), y = s.set('b');
             FinRel lhs = codiag(x.sum(y));
             FinRel rhs = compose(oplus(oplus(id(x), symmetry_sum(y, x)), id(y)), oplus(codiag(x), codiag(y)));
             return verdict(lhs == rhs, "codiag on a sum is not coherent");
         }},
        {"sum coherence of cobang", [](Sampler& s) {
             Carrier x = s.set('a'), y = s.set('b');
             return verdict(cobang(x.sum(y)) == oplus(cobang(x), cobang(y)), "cobang on a sum is not coherent");
         }},
        {"naturality of diag", [](Sampler& s) {
             Carrier x = s.set('a'), y = s.set('b');
             FinRel f = s.rel(x, y);
             return verdict(compose(f, diag(y)) == compose(diag(x), oplus(f, f)), "f;diag != diag;(f+f)");
         }},
        {"naturality of bang", [](Sampler& s) {
             Carrier x = s.set('a'), y = s.set('b');
             FinRel f = s.rel(x, y);
             return verdict(compose(f, bang(y)) == bang(x), "f;bang != bang");
         }},
        {"naturality of codiag", [](Sampler& s) {
             Carrier x = s.set('a'), y = s.set('b');
             FinRel f = s.rel(x, y);
             return verdict(compose(codiag(x), f) == compose(oplus(f, f), codiag(y)), "codiag;f != (f+f);codiag");
         }},
        {"naturality of cobang", [](Sampler& s) {
             Carrier x = s.set('a'), y = s.set('b');
             FinRel f = s.rel(x, y);
             return verdict(compose(cobang(x), f) == cobang(y), "cobang;f != cobang");
         }},
        {"diag right adjoint to codiag", [](Sampler& s) {
             Carrier x = s.set('a');
             bool a = compose(diag(x), codiag(x)).subset_of(id(x));
             bool b = id(x.sum(x)).subset_of(compose(codiag(x), diag(x)));
             return verdict(a && b, "codiag -| diag fails");
         }},
        {"bang right adjoint to cobang", [](Sampler& s) {
             Carrier x = s.set('a');
             bool a = compose(bang(x), cobang(x)).subset_of(id(x));
             bool b = id(s.zero()).subset_of(compose(cobang(x), bang(x)));
             return verdict(a && b, "cobang -| bang fails");
         }},
        {"idempotent convolution", [](Sampler& s) {
             Carrier x = s.set('a'), y = s.set('b');
             FinRel f = s.rel(x, y);
             return verdict(f.join(f) == f, "f|f != f");
         }},
    };
}

std::vector<Law> trace_axiom_laws() {
    return {
        {"tightening", [](Sampler& s) {
             Carrier sc = s.set('a'), x = s.set('b'), y = s.set('c'), x2 = s.set('d'), y2 = s.set('e');
             FinRel f = s.rel(sc.sum(x), sc.sum(y));
             FinRel u = s.rel(x2, x), v = s.rel(y, y2);
             FinRel lhs = trace(sc, compose(compose(oplus(id(sc), u), f), oplus(id(sc), v)));
             FinRel rhs = compose(compose(u, trace(sc, f)), v);
             return verdict(lhs == rhs, "tightening fails");
         }},
        {"strength", [](Sampler& s) {
             Carrier sc = s.set('a'), x = s.set('b'), y = s.set('c'), w = s.set('d'), z = s.set('e');
             FinRel f = s.rel(sc.sum(x), sc.sum(y));
             FinRel g = s.rel(w, z);
             return verdict(trace(sc, oplus(f, g)) == oplus(trace(sc, f), g), "strength fails");
         }},
        {"joining", [](Sampler& s) {
             Carrier sc = s.set('a'), t = s.set('b'), x = s.set('c'), y = s.set('d');
             FinRel f = s.rel(sc.sum(t).sum(x), sc.sum(t).sum(y));
             return verdict(trace(t, trace(sc, f)) == trace(sc.sum(t), f), "joining fails");
         }},
        {"vanishing", [](Sampler& s) {
             Carrier x = s.set('a'), y = s.set('b');
             FinRel f = s.rel(x, y);
             return verdict(trace(s.zero(), f) == f, "vanishing fails");
         }},
        {"sliding", [](Sampler& s) {
             Carrier u = s.set('a'), v = s.set('b'), x = s.set('c'), y = s.set('d');
             FinRel t = s.rel(v.sum(x), u.sum(y));
             FinRel r = s.rel(u, v);
             FinRel lhs = trace(v, compose(t, oplus(r, id(y))));
             FinRel rhs = trace(u, compose(oplus(r, id(x)), t));
             return verdict(lhs == rhs, "sliding fails");
         }},
        {"yanking", [](Sampler& s) {
             Carrier x = s.set('a');
             return verdict(trace(x, symmetry_sum(x, x)) == id(x), "yanking fails");
         }},
        {"trace of codiag;diag", [](Sampler& s) {
             Carrier x = s.set('a');
             return verdict(trace(x, compose(codiag(x), diag(x))) == id(x), "tr(codiag;diag) != id");
         }},
    };
}

std::vector<Law> uniformity_laws() {
    return {
        {"posetal uniformity AU1", [](Sampler& s) {
             Carrier sc = s.set('a'), t = s.set('b'), x = s.set('c'), y = s.set('d');
             FinRel f = s.rel(sc.sum(x), sc.sum(y));
             FinRel g = s.rel(t.sum(x), t.sum(y));
             FinRel r = s.rel(sc, t);
             if (!compose(f, oplus(r, id(y))).subset_of(compose(oplus(r, id(x)), g))) return std::string(kSkip);
             return verdict(trace(sc, f).subset_of(trace(t, g)), "AU1 conclusion fails");
         }},
        {"posetal uniformity AU2", [](Sampler& s) {
             Carrier sc = s.set('a'), t = s.set('b'), x = s.set('c'), y = s.set('d');
             FinRel f = s.rel(sc.sum(x), sc.sum(y));
             FinRel g = s.rel(t.sum(x), t.sum(y));
             FinRel r = s.rel(t, sc);
             if (!compose(oplus(r, id(x)), f).subset_of(compose(g, oplus(r, id(y))))) return std::string(kSkip);
             return verdict(trace(sc, f).subset_of(trace(t, g)), "AU2 conclusion fails");
         }},
    };
}

std::vector<Law> coherence_laws() {
    return {
        {"trace respects tensor", [](Sampler& s) {
             Carrier sc = s.set('a'), x = s.set('b'), y = s.set('c'), z = s.set('d');
             FinRel f = s.rel(sc.sum(x), sc.sum(y));
             FinRel lhs = ten(trace(sc, f), id(z));
             FinRel rhs = trace(sc.tensor(z), ten(f, id(z)));
             return verdict(lhs == rhs, "tr(f)*id != tr(f*id)");
         }},
        {"copier on a sum", [](Sampler& s) {
             Carrier x = s.set('a'), y = s.set('b');
             Carrier xy = x.sum(y);
             FinRel mid = oplus(oplus(oplus(id(x.tensor(x)), cobang(x.tensor(y))), cobang(y.tensor(x))),
                                id(y.tensor(y)));
             FinRel dl1 = distributor_left_inv(x.shape(), x.shape(), y.shape(), s.sizes);
             FinRel dl2 = distributor_left_inv(y.shape(), x.shape(), y.shape(), s.sizes);
             FinRel rhs = compose(compose(oplus(copier(x), copier(y)), mid), oplus(dl1, dl2));
             return verdict(copier(xy) == rhs, "kc coherence for copier fails");
         }},
        {"cocopier on a sum", [](Sampler& s) {
             Carrier x = s.set('a'), y = s.set('b');
             Carrier xy = x.sum(y);
             FinRel mid = oplus(oplus(oplus(id(x.tensor(x)), bang(x.tensor(y))), bang(y.tensor(x))),
                                id(y.tensor(y)));
             FinRel dl1 = distributor_left(x.shape(), x.shape(), y.shape(), s.sizes);
             FinRel dl2 = distributor_left(y.shape(), x.shape(), y.shape(), s.sizes);
             FinRel lhs = compose(compose(oplus(dl1, dl2), mid), oplus(cocopier(x), cocopier(y)));
             return verdict(cocopier(xy) == lhs, "kc coherence for cocopier fails");
         }},
        {"discharger on a sum", [](Sampler& s) {
             Carrier x = s.set('a'), y = s.set('b');
             FinRel rhs = compose(oplus(discharger(x), discharger(y)), codiag(s.unit()));
             return verdict(discharger(x.sum(y)) == rhs, "kc coherence for discharger fails");
         }},
        {"codischarger on a sum", [](Sampler& s) {
             Carrier x = s.set('a'), y = s.set('b');
             FinRel rhs = compose(diag(s.unit()), oplus(codischarger(x), codischarger(y)));
             return verdict(codischarger(x.sum(y)) == rhs, "kc coherence for codischarger fails");
         }},
    };
}

std::vector<Law> kozen_laws() {
    auto leq = [](const FinRel& a, const FinRel& b) { return a.subset_of(b); };
    return {
        {"id | f;f* <= f*", [leq](Sampler& s) {
             Carrier x = s.set('a');
             FinRel f = s.endo(x), fs = star(f);
             return verdict(leq(id(x).join(compose(f, fs)), fs), "left unfolding above star");
         }},
        {"id | f*;f <= f*", [leq](Sampler& s) {
             Carrier x = s.set('a');
             FinRel f = s.endo(x), fs = star(f);
             return verdict(leq(id(x).join(compose(fs, f)), fs), "right unfolding above star");
         }},
        {"f;r <= r implies f*;r <= r", [leq](Sampler& s) {
             Carrier x = s.set('a'), y = s.set('b');
             FinRel f = s.endo(x), r = s.rel(x, y);
             if (!leq(compose(f, r), r)) return std::string(kSkip);
             return verdict(leq(compose(star(f), r), r), "left induction fails");
         }},
        {"l;f <= l implies l;f* <= l", [leq](Sampler& s) {
             Carrier x = s.set('a'), y = s.set('b');
             FinRel f = s.endo(x), l = s.rel(y, x);
             if (!leq(compose(l, f), l)) return std::string(kSkip);
             return verdict(leq(compose(l, star(f)), l), "right induction fails");
         }},
        {"id | f;f* = f* = id | f*;f", [](Sampler& s) {
             Carrier x = s.set('a');
             FinRel f = s.endo(x), fs = star(f);
             bool a = id(x).join(compose(f, fs)) == fs;
             bool b = id(x).join(compose(fs, f)) == fs;
             return verdict(a && b, "star equalities fail");
         }},
        {"f*;g* <= (f|g)*", [](Sampler& s) {
             Carrier x = s.set('a');
             FinRel f = s.endo(x), g = s.endo(x);
             return verdict(compose(star(f), star(g)).subset_of(star(f.join(g))), "star sum fails");
         }},
    };
}

std::vector<Law> star_trace_laws() {
    return {
        {"fixpoint star equals trace star", [](Sampler& s) {
             Carrier x = s.set('a');
             FinRel f = s.endo(x);
             return verdict(star(f) == star_via_trace(f), "the two star routes disagree");
         }},
    };
}

std::vector<Law> cb_derived_laws() {
    return {
        {"meet associativity/commutativity/idempotence", [](Sampler& s) {
             Carrier x = s.set('a'), y = s.set('b');
             FinRel f = s.rel(x, y), g = s.rel(x, y), h = s.rel(x, y);
             bool a = f.meet(g).meet(h) == f.meet(g.meet(h));
             bool b = f.meet(g) == g.meet(f);
             bool c = f.meet(FinRel::full(x, y)) == f;
             bool d = f.meet(f) == f;
             return verdict(a && b && c && d, "meet semilattice fails");
         }},
        {"lax meet enrichment", [](Sampler& s) {
             Carrier x = s.set('a'), y = s.set('b'), z = s.set('c');
             FinRel f = s.rel(x, y), g = s.rel(x, y), h = s.rel(y, z), k = s.rel(z, x);
             bool a = compose(f.meet(g), h).subset_of(compose(f, h).meet(compose(g, h)));
             bool b = compose(k, f.meet(g)).subset_of(compose(k, f).meet(compose(k, g)));
             bool c = compose(f, FinRel::full(y, z)).subset_of(FinRel::full(x, z));
             bool d = compose(FinRel::full(z, x), f).subset_of(FinRel::full(z, y));
             return verdict(a && b && c && d, "lax enrichment fails");
         }},
        {"converse is a monoidal involution", [](Sampler& s) {
             Carrier x = s.set('a'), y = s.set('b'), z = s.set('c');
             FinRel f = s.rel(x, y), g = s.rel(y, z), h = s.rel(z, x);
             bool a = compose(f, g).converse() == compose(g.converse(), f.converse());
             bool b = ten(f, h).converse() == ten(f.converse(), h.converse());
             bool c = id(x).converse() == id(x);
             bool d = f.converse().converse() == f;
             return verdict(a && b && c && d, "converse laws fail");
         }},
    };
}

std::vector<Law> kc_derived_laws() {
    return {
        {"distributive lattice", [](Sampler& s) {
             Carrier x = s.set('a'), y = s.set('b');
             FinRel f = s.rel(x, y), g = s.rel(x, y), h = s.rel(x, y);
             FinRel top = FinRel::full(x, y), bot = FinRel::empty(x, y);
             bool a = f.meet(g.join(h)) == f.meet(g).join(f.meet(h));
             bool b = f.join(g.meet(h)) == f.join(g).meet(f.join(h));
             bool c = f.join(top) == top && f.meet(bot) == bot;
             return verdict(a && b && c, "lattice laws fail");
         }},
        {"star is lax on tensor and meet", [](Sampler& s) {
             Carrier x = s.set('a'), y = s.set('b');
             FinRel f = s.endo(x), g = s.endo(y), h = s.endo(x);
             bool a = star(ten(f, g)).subset_of(ten(star(f), star(g)));
             bool b = star(f.meet(h)).subset_of(star(f).meet(star(h)));
             return verdict(a && b, "lax star laws fail");
         }},
        {"star of top and of converse", [](Sampler& s) {
             Carrier x = s.set('a');
             FinRel f = s.endo(x);
             bool a = star(FinRel::full(x, x)) == FinRel::full(x, x);
             bool b = star(f.converse()) == star(f).converse();
             return verdict(a && b, "star top/converse fails");
         }},
        {"converse distributes over sum structure", [](Sampler& s) {
             Carrier x = s.set('a'), y = s.set('b'), w = s.set('c'), z = s.set('d');
             FinRel f = s.rel(x, y), g = s.rel(w, z), h = s.rel(x, y);
             bool a = oplus(f, g).converse() == oplus(f.converse(), g.converse());
             bool b = f.join(h).converse() == f.converse().join(h.converse());
             bool c = FinRel::empty(x, y).converse() == FinRel::empty(y, x);
             return verdict(a && b && c, "converse over + fails");
         }},
        {"product of stars", [](Sampler& s) {
             Carrier x = s.set('a'), y = s.set('b');
             FinRel f = s.endo(x), g = s.endo(y);
             FinRel lhs = ten(star(f), star(g));
             FinRel rhs = star(ten(f, id(y)).join(ten(id(x), g)));
             return verdict(lhs == rhs, "f* x g* != ((f*id)|(id*g))*");
         }},
    };
}

KAMatrix<BoolKA> random_bool_matrix(Sampler& s, std::size_t n, std::size_t m) {
    KAMatrix<BoolKA> mat{std::vector<int>(n, 0), std::vector<int>(m, 0), {}};
    for (std::size_t k = 0; k < n * m; ++k) mat.entries.push_back((s.rng() & 1) != 0);
    return mat;
}

std::vector<Law> matrix_laws() {
    return {
        {"boolean matrix star equals relation star", [](Sampler& s) {
             std::size_t n = 1 + s.rng() % 5;
             KAMatrix<BoolKA> m = random_bool_matrix(s, n, n);
             SortSizes sz{{"a", static_cast<int>(n)}};
             Carrier x(Polynomial::of_sort("a"), sz);
             FinRel r(x, x);
             for (std::size_t i = 0; i < n; ++i)
                 for (std::size_t j = 0; j < n; ++j)
                     if (m.at(i, j)) r.insert(static_cast<int>(i), static_cast<int>(j));
             KAMatrix<BoolKA> ms = mat_star(m);
             FinRel rs = star(r);
             for (std::size_t i = 0; i < n; ++i)
                 for (std::size_t j = 0; j < n; ++j)
                     if (ms.at(i, j) != rs.contains(static_cast<int>(i), static_cast<int>(j)))
                         return std::string("matrix star disagrees with relational closure");
             return std::string();
         }},
        {"matrix biproduct block laws", [](Sampler& s) {
             std::size_t n = 1 + s.rng() % 3, m = 1 + s.rng() % 3;
             KAMatrix<BoolKA> f = random_bool_matrix(s, n, m);
             std::vector<int> on(n, 0), om(m, 0);
             KAMatrix<BoolKA> idn = mat_identity<BoolKA>(on);
             KAMatrix<BoolKA> idm = mat_identity<BoolKA>(om);
             auto hstack = [](const KAMatrix<BoolKA>& a, const KAMatrix<BoolKA>& b) {
                 KAMatrix<BoolKA> none{{}, a.cols, {}}, noneb{{}, b.cols, {}};
                 return mat_blocks(a, b, none, noneb);
             };
             auto vstack = [](const KAMatrix<BoolKA>& a, const KAMatrix<BoolKA>& b) {
                 KAMatrix<BoolKA> none{a.rows, {}, {}}, noneb{b.rows, {}, {}};
                 return mat_blocks(a, none, b, noneb);
             };
             KAMatrix<BoolKA> zn = mat_zero<BoolKA>(on, on);
             KAMatrix<BoolKA> znm = mat_zero<BoolKA>(on, om);
             KAMatrix<BoolKA> dg_n = hstack(idn, idn);   // diag : n -> n+n
             KAMatrix<BoolKA> dg_m = hstack(idm, idm);
             KAMatrix<BoolKA> cd_n = vstack(idn, idn);   // codiag : n+n -> n
             KAMatrix<BoolKA> ff = mat_blocks(f, znm, znm, f);
             bool diag_nat = mat_equal(mat_compose(f, dg_m), mat_compose(dg_n, ff));
             bool diag_unit = mat_equal(mat_compose(hstack(zn, idn), cd_n), idn);
             bool bialgebra = mat_equal(mat_compose(cd_n, dg_n), mat_blocks(idn, idn, idn, idn));
             return verdict(diag_nat && diag_unit && bialgebra, "matrix biproduct laws fail");
         }},
        {"matrix implicational star laws", [](Sampler& s) {
             std::size_t n = 1 + s.rng() % 3, m = 1 + s.rng() % 3;
             KAMatrix<BoolKA> f = random_bool_matrix(s, n, n);
             KAMatrix<BoolKA> r = random_bool_matrix(s, n, m);
             auto leq = [](const KAMatrix<BoolKA>& a, const KAMatrix<BoolKA>& b) {
                 return mat_equal(mat_join(a, b), b);
             };
             if (!leq(mat_compose(f, r), r)) return std::string(kSkip);
             return verdict(leq(mat_compose(mat_star(f), r), r), "matrix induction fails");
         }},
    };
}

std::vector<Law> suite_for(const std::string& name) {
    if (name == "cb-axioms") return cb_axiom_laws();
    if (name == "fb-axioms") return fb_axiom_laws();
    if (name == "trace-axioms") return trace_axiom_laws();
    if (name == "uniformity") return uniformity_laws();
    if (name == "coherence") return coherence_laws();
    if (name == "kozen") return kozen_laws();
    if (name == "star-trace") return star_trace_laws();
    if (name == "cb-derived") return cb_derived_laws();
    if (name == "kc-derived") return kc_derived_laws();
    if (name == "matrix") return matrix_laws();
    throw Error("unknown law suite '" + name + "'");
}

}  // namespace

std::vector<std::string> law_suite_names() {
    return {"cb-axioms", "fb-axioms", "trace-axioms", "uniformity", "coherence",
            "kozen",     "star-trace", "cb-derived",  "kc-derived", "matrix"};
}

std::vector<LawCheck> run_law_suite(const std::string& suite, int samples, std::uint64_t seed, int max_size) {
    if (suite == "all") {
        std::vector<LawCheck> all;
        for (const std::string& name : law_suite_names()) {
            auto part = run_law_suite(name, samples, seed, max_size);
            all.insert(all.end(), part.begin(), part.end());
        }
        return all;
    }
    std::vector<LawCheck> out;
    std::uint64_t law_index = 0;
    for (const Law& law : suite_for(suite)) {
        LawCheck check;
        check.name = law.name;
        Sampler s(seed * 1000003 + law_index++);
        for (int k = 0; k < samples; ++k) {
            s.fresh_sizes(max_size);
            std::string result = law.fn(s);
            if (result == kSkip) continue;
            ++check.checked;
            if (!result.empty()) {
                ++check.failures;
                if (check.witness.empty()) check.witness = result + " (sample " + std::to_string(k) + ")";
            }
        }
        out.push_back(std::move(check));
    }
    return out;
}

}  // namespace tapes
