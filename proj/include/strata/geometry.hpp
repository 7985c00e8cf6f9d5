// geometry.hpp: exact rational chord geometry for curve paths.
//
// Each curve is drawn with a private lane offset: its path crosses every
// square side at distance 1/2 + lane from the side's origin (left and
// right sides are crossed at height 1/2 + lane, bottom and top at
// horizontal position 1/2 + lane). A step is drawn as the straight chord
// between its entry and exit points, so two curves with distinct lanes
// meet only at transverse interior crossings, computed here exactly.
#pragma once

#include <cstdint>
#include <vector>

#include "strata/winding.hpp"

namespace strata {

// Exact fraction on int64 with overflow checks.
struct Frac {
  long long n = 0, d = 1;  // normalized: d > 0, gcd(|n|, d) = 1

  Frac() = default;
  Frac(long long num, long long den);
  static Frac of(long long k) { return Frac(k, 1); }

  Frac operator+(const Frac&) const;
  Frac operator-(const Frac&) const;
  Frac operator*(const Frac&) const;
  Frac operator/(const Frac&) const;
  bool operator==(const Frac&) const = default;
  bool operator<(const Frac&) const;
  int sign() const { return n > 0 ? 1 : n < 0 ? -1 : 0; }
};

// Evenly spaced lanes in (-1/4, 1/4): lane k of m.
Frac lane_of(int k, int m);

struct PathCrossing {
  size_t step1;  // step index along the first path
  Frac t1;       // parameter along that step's chord, in (0, 1)
  size_t step2;
  Frac t2;
  int sign;  // +1 if the second chord crosses the first left to right
};

// All transverse crossings between the chord drawings of two distinct
// closed paths on the same origami. Throws if the lanes coincide.
std::vector<PathCrossing> chord_crossings(const CurvePath& p1, const Frac& lane1,
                                          const CurvePath& p2, const Frac& lane2);

// Geometric (count) and algebraic (signed) crossing numbers of the chord
// drawings.
int chord_crossing_count(const CurvePath& p1, const Frac& lane1, const CurvePath& p2,
                         const Frac& lane2);
int chord_crossing_sum(const CurvePath& p1, const Frac& lane1, const CurvePath& p2,
                       const Frac& lane2);

}  // namespace strata
