#pragma once

#include <string>

#include "ccg/tile.hpp"

namespace ccg {

/// Tile-drawing enforcement gadget: the tile graph plus a frame cycle
/// through the walls (left in order, right reversed) and an apex adjacent to
/// every frame vertex. A zero-crossing tile drawing exists iff the gadget is
/// planar; for positive tile crossing numbers the oracle enumerates crossing
/// pairs over the tile's own edges only.
struct FrameGadget {
  MultiGraph graph;
  std::size_t tile_edge_count;  // gadget edges occupy indices >= this
  int apex;
};

/// `bundle_multiplicity` replaces each frame edge by that many internally
/// disjoint length-2 paths; the oracle's answers must not depend on it.
FrameGadget frame_gadget(const Tile& t, int bundle_multiplicity = 1);

bool is_planar_tile(const Tile& t);

struct PerfectReport {
  bool ok = false;
  bool exact = true;  // false when a (p.iv) search hit its budget
  std::string violation;
};

/// Checks (p.i) equal walls, (p.ii) wall-deleted connectivity, (p.iii)
/// wall-escape paths, (p.iv) disjoint path pairs for every index pair.
PerfectReport is_perfect_tile(const Tile& t);

}  // namespace ccg
