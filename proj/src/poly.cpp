#include "tapes/poly.hpp"

namespace tapes {

Polynomial poly_sum(const Polynomial& p, const Polynomial& q) {
    Polynomial r = p;
    r.summands.insert(r.summands.end(), q.summands.begin(), q.summands.end());
    return r;
}

Polynomial poly_product(const Polynomial& p, const Polynomial& q) {
    Polynomial r;
    r.summands.reserve(p.summands.size() * q.summands.size());
    for (const Monomial& u : p.summands)
        for (const Monomial& v : q.summands) r.summands.push_back(concat(u, v));
    return r;
}

std::string to_string(const Monomial& u) {
    if (u.is_unit()) return "1";
    std::string s;
    for (std::size_t i = 0; i < u.factors.size(); ++i) {
        if (i) s += "*";
        s += u.factors[i];
    }
    return s;
}

std::string to_string(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::string s;
    for (std::size_t i = 0; i < p.summands.size(); ++i) {
        if (i) s += " + ";
        s += to_string(p.summands[i]);
    }
    return s;
}

void Signature::add_symbol(const std::string& name, Monomial arity, Monomial coarity) {
    for (const Sort& a : arity.factors)
        if (!sorts.count(a)) throw UnknownSymbol("sort '" + a + "' in arity of '" + name + "' not declared");
    for (const Sort& a : coarity.factors)
        if (!sorts.count(a)) throw UnknownSymbol("sort '" + a + "' in coarity of '" + name + "' not declared");
    symbols[name] = {std::move(arity), std::move(coarity)};
}

const std::pair<Monomial, Monomial>& Signature::arity_of(const std::string& name) const {
    auto it = symbols.find(name);
    if (it == symbols.end()) throw UnknownSymbol("symbol '" + name + "' not declared");
    return it->second;
}

}  // namespace tapes
