// fatgraph.hpp: ribbon-graph boundary tracing for a union of oriented
// closed curves on an oriented surface.
//
// The union is described combinatorially: for each curve, the cyclic order
// of its crossings with the other curves, and each crossing's sign. The
// faces are the boundary circles of a regular neighborhood of the union;
// for a connected union with V crossings on a closed genus-g surface the
// complement consists of disks exactly when there are 2 - 2g + V faces.
#pragma once

#include <vector>

#include "strata/origami.hpp"

namespace strata {

struct RibbonCrossing {
  int c1;    // first curve index
  int r1;    // rank of this event in c1's cyclic order (0-based)
  int c2;    // second curve index (c2 != c1)
  int r2;    // rank in c2's cyclic order
  int sign;  // +1 if c2 crosses c1 left to right, -1 otherwise
};

struct StrandSide {
  int curve;
  int arc;   // arc k runs from the curve's event k to event k+1 (cyclically)
  int side;  // +1 for the left side of the arc, -1 for the right
  bool operator==(const StrandSide&) const = default;
};

using RibbonFace = std::vector<StrandSide>;  // cyclic boundary walk

// Trace all boundary faces. events[c] is the number of crossings on curve
// c; every curve must carry at least one and every (curve, rank) pair must
// be covered by exactly one crossing. Each (curve, arc, side) triple
// appears in exactly one face.
std::vector<RibbonFace> trace_ribbon_faces(const std::vector<int>& events,
                                           const std::vector<RibbonCrossing>& crossings);

}  // namespace strata
