#include "tapes/json_io.hpp"

#include <fstream>

#include <json.hpp>

#include "tapes/sexpr.hpp"

namespace tapes {

namespace {

using nlohmann::json;

json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "'");
    json j;
    in >> j;
    return j;
}

Monomial word_from(const json& j) {
    Monomial u;
    for (const auto& a : j) u.factors.push_back(a.get<std::string>());
    return u;
}

Signature signature_from(const json& j) {
    Signature sig;
    if (j.contains("sorts")) {
        if (j["sorts"].is_array())
            for (const auto& a : j["sorts"]) sig.add_sort(a.get<std::string>());
        else
            for (const auto& [name, size] : j["sorts"].items()) sig.add_sort(name);
    }
    if (j.contains("symbols"))
        for (const auto& [name, sym] : j["symbols"].items())
            sig.add_symbol(name, word_from(sym.at("arity")), word_from(sym.at("coarity")));
    return sig;
}

int element_index(const Carrier& carrier, const json& elem) {
    std::vector<int> tuple;
    for (const auto& v : elem) tuple.push_back(v.get<int>());
    return carrier.index_of(0, tuple);
}

}  // namespace

Interpretation load_interpretation(const std::string& path) {
    json j = read_json(path);
    Interpretation interp;
    interp.signature = signature_from(j);
    for (const auto& [name, size] : j.at("sorts").items()) interp.sizes[name] = size.get<int>();
    if (j.contains("symbols")) {
        for (const auto& [name, sym] : j["symbols"].items()) {
            Carrier dom = interp.carrier(word_from(sym.at("arity")));
            Carrier cod = interp.carrier(word_from(sym.at("coarity")));
            FinRel rel(dom, cod);
            for (const auto& pair : sym.at("pairs"))
                rel.insert(element_index(dom, pair.at(0)), element_index(cod, pair.at(1)));
            interp.set_relation(name, std::move(rel));
        }
    }
    return interp;
}

std::string interpretation_to_json(const Interpretation& interp) {
    json j;
    j["sorts"] = json::object();
    for (const auto& [name, size] : interp.sizes)
        if (interp.signature.sorts.count(name)) j["sorts"][name] = size;
    j["symbols"] = json::object();
    for (const auto& [name, rel] : interp.relations) {
        json sym;
        const auto& [ar, coar] = interp.signature.arity_of(name);
        sym["arity"] = ar.factors;
        sym["coarity"] = coar.factors;
        json pairs = json::array();
        for (auto [x, y] : rel.pairs()) pairs.push_back({rel.dom().tuple_of(x), rel.cod().tuple_of(y)});
        sym["pairs"] = std::move(pairs);
        j["symbols"][name] = std::move(sym);
    }
    return j.dump(2);
}

TermFile load_term_file(const std::string& path) {
    json j = read_json(path);
    TermFile f;
    f.signature = signature_from(j.at("signature"));
    f.term = parse_tape_sexpr(j.at("term").get<std::string>(), f.signature);
    return f;
}

std::string term_file_to_json(const Signature& sig, const TapePtr& term) {
    json j;
    j["signature"]["sorts"] = json::array();
    for (const Sort& a : sig.sorts) j["signature"]["sorts"].push_back(a);
    j["signature"]["symbols"] = json::object();
    for (const auto& [name, arity] : sig.symbols) {
        j["signature"]["symbols"][name] = {{"arity", arity.first.factors}, {"coarity", arity.second.factors}};
    }
    j["term"] = dump_sexpr(term);
    return j.dump(2);
}

Theory load_theory(const std::string& path) {
    json j = read_json(path);
    Theory t;
    t.signature = signature_from(j.at("signature"));
    for (const auto& ax : j.at("axioms")) {
        Axiom a;
        a.lhs = parse_tape_sexpr(ax.at("lhs").get<std::string>(), t.signature);
        a.rhs = parse_tape_sexpr(ax.at("rhs").get<std::string>(), t.signature);
        a.is_equality = ax.contains("kind") && ax.at("kind").get<std::string>() == "eq";
        t.axioms.push_back(std::move(a));
    }
    return t;
}

IneqFile load_ineq_file(const std::string& path) {
    json j = read_json(path);
    IneqFile f;
    f.signature = signature_from(j.at("signature"));
    f.lhs = parse_tape_sexpr(j.at("lhs").get<std::string>(), f.signature);
    f.rhs = parse_tape_sexpr(j.at("rhs").get<std::string>(), f.signature);
    return f;
}

std::string finrel_to_json(const FinRel& rel) {
    json pairs = json::array();
    for (auto [x, y] : rel.pairs()) pairs.push_back({rel.dom().tuple_of(x), rel.cod().tuple_of(y)});
    return pairs.dump();
}

}  // namespace tapes
