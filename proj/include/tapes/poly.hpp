#ifndef TAPES_POLY_HPP
#define TAPES_POLY_HPP

#include <compare>
#include <initializer_list>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tapes/errors.hpp"

namespace tapes {

using Sort = std::string;

/// A word over the sort set. The empty word is the tensor unit.
struct Monomial {
    std::vector<Sort> factors;

    Monomial() = default;
    explicit Monomial(std::vector<Sort> fs) : factors(std::move(fs)) {}
    Monomial(std::initializer_list<Sort> fs) : factors(fs) {}

    static Monomial unit() { return Monomial{}; }
    bool is_unit() const { return factors.empty(); }
    std::size_t length() const { return factors.size(); }

    friend Monomial concat(const Monomial& a, const Monomial& b) {
        Monomial r = a;
        r.factors.insert(r.factors.end(), b.factors.begin(), b.factors.end());
        return r;
    }

    auto operator<=>(const Monomial&) const = default;
};

/// A word of words: the canonical object form. Sum is concatenation
/// of summands, the empty list is the zero object.
struct Polynomial {
    std::vector<Monomial> summands;

    Polynomial() = default;
    explicit Polynomial(std::vector<Monomial> ss) : summands(std::move(ss)) {}
    Polynomial(std::initializer_list<Monomial> ss) : summands(ss) {}

    static Polynomial zero() { return Polynomial{}; }
    static Polynomial unit() { return Polynomial{Monomial::unit()}; }
    static Polynomial of(Monomial u) { return Polynomial{std::move(u)}; }
    static Polynomial of_sort(const Sort& a) { return of(Monomial{a}); }

    bool is_zero() const { return summands.empty(); }
    std::size_t branches() const { return summands.size(); }

    auto operator<=>(const Polynomial&) const = default;
};

Polynomial poly_sum(const Polynomial& p, const Polynomial& q);

/// The product of words of words, in i-major order:
/// for P = sum_i U_i and Q = sum_j V_j the result is sum_i sum_j U_i V_j.
Polynomial poly_product(const Polynomial& p, const Polynomial& q);

std::string to_string(const Monomial& u);
std::string to_string(const Polynomial& p);

/// A monoidal signature: sorts plus symbols with monomial (co)arities.
struct Signature {
    std::set<Sort> sorts;
    std::map<std::string, std::pair<Monomial, Monomial>> symbols;

    void add_sort(const Sort& a) { sorts.insert(a); }
    void add_symbol(const std::string& name, Monomial arity, Monomial coarity);

    bool has_symbol(const std::string& name) const { return symbols.count(name) != 0; }
    const std::pair<Monomial, Monomial>& arity_of(const std::string& name) const;
};

}  // namespace tapes

#endif
