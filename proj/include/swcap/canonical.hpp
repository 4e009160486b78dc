#pragma once
// Canonical forms of decorated forests, for isomorphism tests.

#include <string>

#include "swcap/graph.hpp"

namespace swcap {

/// String that is equal for two decorated forests exactly when they are
/// isomorphic (Euler numbers, arrows and, if `with_multiplicities`,
/// multiplicities are part of the vertex label). Rooted at tree centres.
std::string canonical_form(const PlumbingGraph& g, bool with_multiplicities = false);

bool isomorphic(const PlumbingGraph& a, const PlumbingGraph& b);

}  // namespace swcap
