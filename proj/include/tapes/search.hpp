#ifndef TAPES_SEARCH_HPP
#define TAPES_SEARCH_HPP

#include <cstdint>
#include <optional>

#include "tapes/interp.hpp"

namespace tapes {

/// How a symbol's relation is enumerated during the search.
///   Raw           — every subset of dom x cod;
///   FunctionGraph — only graphs of total functions dom -> cod;
///   ComplementOf  — fixed to the complement of the named partner.
struct SymbolMode {
    enum class Kind { Raw, FunctionGraph, ComplementOf } kind = Kind::Raw;
    std::string partner;

    static SymbolMode raw() { return {}; }
    static SymbolMode function_graph() { return {Kind::FunctionGraph, {}}; }
    static SymbolMode complement_of(std::string r) { return {Kind::ComplementOf, std::move(r)}; }
};

using SymbolModes = std::map<std::string, SymbolMode>;

struct SearchOptions {
    int max_size = 2;
    std::uint64_t budget = 1u << 20;
    std::uint64_t seed = 1;
    SymbolModes modes;  // symbols not listed are enumerated raw
};

/// Looks for an interpretation where eval(lhs) is not included in
/// eval(rhs). Size assignments are tried ascending (total size, then
/// lexicographic); for each assignment symbol relations are enumerated
/// as ascending bitmask integers, first symbol most significant. If the
/// whole space exceeds the budget, `budget` interpretations are sampled
/// instead with the seeded generator. No result is not a validity proof.
std::optional<Interpretation> search_countermodel(const TapePtr& lhs, const TapePtr& rhs, const Signature& sig,
                                                  const SearchOptions& opts);

/// The same search against every axiom of a theory.
std::optional<Interpretation> search_theory_countermodel(const Theory& theory, const SearchOptions& opts);

}  // namespace tapes

#endif
