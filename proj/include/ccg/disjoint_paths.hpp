#pragma once

#include <optional>
#include <vector>

#include "ccg/multigraph.hpp"

namespace ccg {

enum class SearchVerdict { Found, NotFound, Unknown };

struct TwoPathsResult {
  SearchVerdict verdict = SearchVerdict::Unknown;
  std::vector<int> path1;  // s1..t1 when found
  std::vector<int> path2;  // s2..t2
};

/// Two vertex-disjoint paths with the prescribed endpoint pairing.
/// Exhaustive backtracking below `vertex_bound`; beyond it, or when the
/// expansion budget runs out, an unsettled search reports Unknown.
TwoPathsResult two_disjoint_paths(const MultiGraph& g, int s1, int t1, int s2,
                                  int t2, std::size_t vertex_bound = 64,
                                  long long budget = 2'000'000);

}  // namespace ccg
