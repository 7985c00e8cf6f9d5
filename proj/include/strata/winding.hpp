// winding.hpp: closed curves on an origami as side-level step sequences,
// their turning/winding numbers, crossing counts, and cylinder twists.
//
// A path is a cyclic sequence of steps (square, entry side, exit side). The
// chord of a step runs between the midpoints of its two sides; consecutive
// steps match across gluings (exit R of s enters L of h(s), exit T enters B
// of v(s), and conversely). Turning is totalled in octants: each step has a
// coarse direction, consecutive directions may differ by at most 135
// degrees, and a closed path turns by a multiple of 360.
#pragma once

#include <string>
#include <vector>

#include "strata/origami.hpp"

namespace strata {

enum class Side : uint8_t { L = 0, R = 1, B = 2, T = 3 };

char side_char(Side s);
Side side_from_char(char c);

struct Step {
  int sq;
  Side in, out;
  bool operator==(const Step&) const = default;
};
using CurvePath = std::vector<Step>;

// Throws std::invalid_argument on bad squares, in==out, or gluing breaks
// (including the wrap from last step to first).
void validate_path(const Origami& o, const CurvePath& p);

// Coarse direction of a step, eighth turns counterclockwise from east:
// E=0, NE=1, N=2, NW=3, W=4, SW=5, S=6, SE=7.
int octant(Side in, Side out);

// Net turning of a closed path in full turns. Consecutive octant
// differences are reduced to [-3, 3]; a difference of 4 (a U-turn) is
// rejected. Equals the winding number of the curve relative to the
// horizontal direction field of the flat structure.
int turning_number(const CurvePath& p);

// validate + turning reduced mod r (non-negative representative).
int wn_mod(const Origami& o, const CurvePath& p, int r);

// JSON: [{"sq":0,"in":"B","out":"T"}, ...]
std::string path_to_json(const CurvePath& p);
CurvePath path_from_json(const std::string& text);

// --- crossing counts against straight walls --------------------------

// Net eastward flux of the path across the right edges of the listed
// squares: +1 per step exiting R of a listed square, -1 per step exiting L
// of a square whose left neighbor is listed. This is the signed
// intersection with the northbound cycle running up those edges.
int vwall_cross(const Origami& o, const CurvePath& p, const std::vector<int>& squares);

// Net upward flux across the top edges of the listed squares: +1 per step
// exiting T of a listed square, -1 per step exiting B of a square whose
// lower neighbor is listed. Signed intersection with the eastbound cycle
// along those edges is the negative of this flux.
int hwall_cross(const Origami& o, const CurvePath& p, const std::vector<int>& squares);

// --- canonical loops ---------------------------------------------------

// Chord cutting across the given corner of its square, oriented
// counterclockwise around the vertex at that corner.
Step corner_chord(Corner c);

// Closed loop of corner chords around the vertex containing the given
// corner. ccw = counterclockwise (vertex kept on the left); its turning is
// +L for a vertex of cone angle 2*pi*L, i.e. k+1 around an order-k zero.
CurvePath loop_around_vertex(const Origami& o, Corner c, bool ccw);

// --- cylinder twists ---------------------------------------------------

// Image of the path under one twist about the cylinder core. Every
// transversal crossing of the (height-1) cylinder is rerouted once around
// the core; chirality +1 is the right-handed twist, which acts on homology
// by x -> x - <x, core> core.
CurvePath twist_path(const Origami& o, const CurvePath& p, const Cylinder& cyl,
                     int chirality);

}  // namespace strata
