#pragma once

#include <string>

#include "ccg/multigraph.hpp"

namespace ccg {

/// Canonical byte string: equal iff the multigraphs are isomorphic
/// (labels ignored, multiplicities respected). Small graphs only.
std::string canonical_form(const MultiGraph& g, std::size_t bound = 64);

bool isomorphic(const MultiGraph& a, const MultiGraph& b,
                std::size_t bound = 64);

}  // namespace ccg
