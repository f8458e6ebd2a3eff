#ifndef TAPES_DOT_HPP
#define TAPES_DOT_HPP

#include <string>

#include "tapes/term.hpp"

namespace tapes {

/// Renders a term as Graphviz text: sequential composition left to
/// right, sums as stacked branches, circuits nested inside tape
/// clusters, traces as dashed clusters with a feedback edge.
std::string to_dot(const TapePtr& t);

}  // namespace tapes

#endif
