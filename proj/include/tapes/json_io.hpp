#ifndef TAPES_JSON_IO_HPP
#define TAPES_JSON_IO_HPP

#include <string>

#include "tapes/interp.hpp"

namespace tapes {

// File formats, all JSON:
//   interpretation  {"sorts": {"A": 2}, "symbols": {"R": {"arity": ["A"],
//                    "coarity": ["A"], "pairs": [[[0],[1]]]}}}
//                   where an element of a monomial carrier is an array of
//                   0-based integers;
//   term            {"signature": {"sorts": [...], "symbols": {...}},
//                    "term": "<s-expression>"};
//   theory          {"signature": ..., "axioms": [{"lhs": "...",
//                    "rhs": "...", "kind": "leq"|"eq"}]};
//   inequality      {"signature": ..., "lhs": "...", "rhs": "..."}.

Interpretation load_interpretation(const std::string& path);
std::string interpretation_to_json(const Interpretation& interp);

struct TermFile {
    Signature signature;
    TapePtr term;
};
TermFile load_term_file(const std::string& path);
std::string term_file_to_json(const Signature& sig, const TapePtr& term);

Theory load_theory(const std::string& path);

struct IneqFile {
    Signature signature;
    TapePtr lhs, rhs;
};
IneqFile load_ineq_file(const std::string& path);

std::string finrel_to_json(const FinRel& rel);

}  // namespace tapes

#endif
