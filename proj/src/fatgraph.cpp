#include "strata/fatgraph.hpp"

#include <map>
#include <stdexcept>

namespace strata {

namespace {

struct EventRef {
  int other;   // the crossing partner
  int orank;   // partner's rank for this crossing
  int esign;   // sign as seen from this curve (+1: partner crosses left to right)
};

}  // namespace

std::vector<RibbonFace> trace_ribbon_faces(const std::vector<int>& events,
                                           const std::vector<RibbonCrossing>& crossings) {
  const int nc = static_cast<int>(events.size());
  std::vector<std::vector<EventRef>> ev(nc);
  for (int c = 0; c < nc; ++c) {
    if (events[c] <= 0)
      throw std::invalid_argument("every curve must cross the rest of the union");
    ev[c].assign(events[c], {-1, -1, 0});
  }
  auto put = [&](int c, int r, int other, int orank, int esign) {
    if (c < 0 || c >= nc || r < 0 || r >= events[c])
      throw std::invalid_argument("crossing rank out of range");
    if (ev[c][r].other != -1) throw std::invalid_argument("duplicate crossing rank");
    ev[c][r] = {other, orank, esign};
  };
  for (const RibbonCrossing& x : crossings) {
    if (x.c1 == x.c2) throw std::invalid_argument("self-crossings are not supported");
    if (x.sign != 1 && x.sign != -1) throw std::invalid_argument("crossing sign must be +-1");
    put(x.c1, x.r1, x.c2, x.r2, x.sign);
    put(x.c2, x.r2, x.c1, x.r1, -x.sign);
  }
  for (int c = 0; c < nc; ++c)
    for (int r = 0; r < events[c]; ++r)
      if (ev[c][r].other == -1) throw std::invalid_argument("uncovered crossing rank");

  // Walk rule at a crossing met by the strand-side (curve, arc, side):
  // the left side of arc k is walked forward into the event at rank k+1,
  // the right side backward into the event at rank k. With e the sign of
  // the partner's crossing as seen from the current curve, the boundary
  // turns onto the partner d: forward-left arrivals continue onto
  // (d.arc_after, left) when e > 0 and (d.arc_before, right) otherwise;
  // backward-right arrivals swap the rule.
  auto next_state = [&](const StrandSide& s) -> StrandSide {
    int m = events[s.curve];
    int rank = s.side > 0 ? (s.arc + 1) % m : s.arc;
    const EventRef& e = ev[s.curve][rank];
    int md = events[e.other];
    bool to_left = s.side > 0 ? e.esign > 0 : e.esign < 0;
    if (to_left) return {e.other, e.orank, +1};
    return {e.other, (e.orank - 1 + md) % md, -1};
  };

  std::map<std::tuple<int, int, int>, char> seen;
  std::vector<RibbonFace> faces;
  for (int c = 0; c < nc; ++c)
    for (int a = 0; a < events[c]; ++a)
      for (int side : {+1, -1}) {
        if (seen.count({c, a, side})) continue;
        RibbonFace face;
        StrandSide cur{c, a, side};
        while (!seen.count({cur.curve, cur.arc, cur.side})) {
          seen[{cur.curve, cur.arc, cur.side}] = 1;
          face.push_back(cur);
          cur = next_state(cur);
        }
        if (!(cur == face.front()))
          throw std::logic_error("boundary walk re-entered a face mid-cycle");
        faces.push_back(std::move(face));
      }
  return faces;
}

}  // namespace strata
