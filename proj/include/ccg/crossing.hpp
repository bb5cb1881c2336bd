#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ccg/multigraph.hpp"
#include "ccg/tile.hpp"

namespace ccg {

/// A witness set of crossings: unordered pairs of independent edges,
/// addressed by index into the graph's edge list.
struct CrossingSet {
  std::vector<std::pair<int, int>> pairs;  // normalized first < second
};

/// Throws if a pair repeats, an edge pairs with itself, or paired edges
/// share an endpoint.
void validate_crossing_set(const MultiGraph& g, const CrossingSet& cs);

/// Replaces each chosen crossing by a degree-4 dummy vertex. Multiple
/// crossings on one edge are threaded in pair-rank order from the low
/// endpoint (deterministic).
MultiGraph planarize(const MultiGraph& g, const CrossingSet& cs);

/// True iff some ordering of the dummies along multiply-crossed edges gives
/// a planar planarization (a drawing realizing exactly these pairs exists).
/// The chosen order is not reported; `planarize` stays canonical.
bool planarization_planar(const MultiGraph& g, const CrossingSet& cs,
                          int order_cap = 5040);

enum class LowerCertKind {
  None,
  Exhaustion,
  TwistedFamily,
  StaircaseStrip,
  ZipAdditivity,
};

enum class Provenance { OracleExact, CertificateLowerWitnessUpper, PaperDerived };

struct CrResult {
  long long value = -1;  // exact value, or the best upper bound when inexact
  bool exact = false;
  std::optional<CrossingSet> upper_witness;
  long long lower_bound = 0;
  LowerCertKind lower_kind = LowerCertKind::None;
  std::string lower_detail;
  long long tests_used = 0;
  bool budget_exhausted = false;
};

struct OracleOptions {
  long long budget = 10'000'000;  // planarity tests
  int max_k = 16;
  std::vector<CrossingSet> seeds;  // tried first at their own level
};

/// Exact crossing number by iterative deepening over crossing-pair subsets.
/// Exhaustion of level k-1 certifies the lower bound. Assumes good drawings
/// (no adjacent-edge crossings, no pair crossing twice), which is sound for
/// optimal drawings.
CrResult cr_exact(const MultiGraph& g, const OracleOptions& opt = {});

/// Exact tile crossing number via the frame gadget; only tile edges enter
/// the crossing-pair universe.
CrResult tcr_exact(const Tile& t, const OracleOptions& opt = {});

/// Same search with frame edges thickened into bundles; answers must agree
/// with the default (gadget saturation check).
CrResult tcr_exact_with_multiplicity(const Tile& t, const OracleOptions& opt,
                                     int bundle_multiplicity);

/// Independent (non-adjacent) edge pairs of g, lexicographically ordered.
std::vector<std::pair<int, int>> independent_pairs(const MultiGraph& g);

}  // namespace ccg
