#ifndef ALCOR_RENDER_HPP
#define ALCOR_RENDER_HPP

#include <string>

#include "alcor/kb.hpp"

namespace alcor {

// Serializes a knowledge base back to the document syntax.  The output
// re-parses to a structurally identical knowledge base: statement and DBox
// order are preserved, weighted statements always carry an explicit weight
// (infinity as "inf"), and a defeasible knowledge base always emits its dbox
// block even when empty.
std::string render(const WeightedKb&);
std::string render(const DefeasibleKb&);
std::string render(const ParsedKb&);

}  // namespace alcor

#endif  // ALCOR_RENDER_HPP
