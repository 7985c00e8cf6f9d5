// salter.hpp: generation-hypothesis checks for the twist group of a curve
// network.
//
// Given a prototype and the framing it induces, verify the four conditions
// under which the twists along the network curves generate the full
// stabilizer of the framing (odd modulus) or a finite-index subgroup of it
// (even modulus):
//   (1) the framing vanishes on every oriented network curve;
//   (2) a subset of the network forms the D_{2r+3} tree together with a
//       companion curve extending its long arm;
//   (3) the distinguished curve d attached to that configuration meets some
//       network curve exactly once;
//   (4) the curves disjoint from d contain a connected arboreal subnetwork
//       filling the surface cut along d.
// Filling is certified by an exact Euler count of ribbon-graph faces plus
// face homology classes, not by inspection.
#pragma once

#include <string>
#include <vector>

#include "strata/curve_system.hpp"
#include "strata/winding.hpp"

namespace strata {

struct SalterReport {
  int g = 0;
  int r = 0;  // framing modulus
  LabelCase lcase = LabelCase::OneTwo;

  bool network_filling = false;   // standing hypothesis: C connected and filling
  bool vanishing = false;         // condition (1)
  bool d_configuration = false;   // condition (2)
  bool meets_delta = false;       // condition (3)
  bool cut_filling = false;       // condition (4)

  std::vector<std::string> config_names;  // D_{2r+3} witness subset
  std::string companion;                  // companion curve name
  std::string delta;                      // the distinguished curve d
  std::string delta_witness;              // a network curve meeting d once
  std::vector<std::string> cut_network;   // the certified subnetwork for (4)

  bool auxiliary_added = false;  // a braided curve was part of the alphabet
  int genus_floor = 0;           // smallest genus the even-modulus theorem covers
  bool genus_ok = true;

  bool pass() const {
    return network_filling && vanishing && d_configuration && meets_delta && cut_filling;
  }
};

// A curve added to the network alphabet, drawn on the prototype.
struct ExtraCurve {
  std::string name;
  CurvePath path;
};

// The braided auxiliary curve used to repair condition (4) when the figure
// splits at a_2: the boundary curve of the chain from a_3 to a_{3+r} is
// slid, one verified half-twist at a time, until it encloses the two
// leftmost and the 2r rightmost branch points of the chain subsurface. The
// result misses both b_2 and b_3 and meets the chain exactly in a_1' and
// a'_{g-r}.
ExtraCurve braided_auxiliary_curve(const Prototype& p);

// Run all checks for the framing of modulus r induced by the prototype.
// Guard: requires g >= 5 and r <= g-3, the range in which the companion
// configuration fits on the surface.
SalterReport salter_conditions_check(const Prototype& p, int r,
                                     const std::vector<ExtraCurve>& extra = {});

// Exact geometric intersection number of two drawn closed curves. Shared-
// lane drawings can overshoot the geometric count by even excess when one
// curve hugs the other; against a straight cylinder ride the excess pairs
// are cancelled. At least one argument should be a straight ride, otherwise
// the raw drawn count (an upper bound of the correct parity) is returned.
int reduced_crossing_count(const CurvePath& a, const CurvePath& b);

std::string salter_report_to_json(const SalterReport& rep);

}  // namespace strata
