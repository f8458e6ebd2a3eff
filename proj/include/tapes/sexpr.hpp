#ifndef TAPES_SEXPR_HPP
#define TAPES_SEXPR_HPP

#include <string>

#include "tapes/term.hpp"

namespace tapes {

/// Textual S-expression form of core-grammar terms; parse(dump(t)) is
/// structurally equal to t.
std::string dump_sexpr(const CircuitPtr& c);
std::string dump_sexpr(const TapePtr& t);

/// Parsing needs the signature to recover generator arities.
CircuitPtr parse_circuit_sexpr(const std::string& text, const Signature& sig);
TapePtr parse_tape_sexpr(const std::string& text, const Signature& sig);

}  // namespace tapes

#endif
