#include "strata/geometry.hpp"

#include <numeric>
#include <stdexcept>

namespace strata {

namespace {

long long checked(__int128 v) {
  if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("fraction overflow");
  return static_cast<long long>(v);
}

}  // namespace

Frac::Frac(long long num, long long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  if (den < 0) { num = -num; den = -den; }
  long long g = std::gcd(num < 0 ? -num : num, den);
  if (g == 0) g = 1;
  n = num / g;
  d = den / g;
}

Frac Frac::operator+(const Frac& o) const {
  return Frac(checked(static_cast<__int128>(n) * o.d + static_cast<__int128>(o.n) * d),
              checked(static_cast<__int128>(d) * o.d));
}

Frac Frac::operator-(const Frac& o) const {
  return Frac(checked(static_cast<__int128>(n) * o.d - static_cast<__int128>(o.n) * d),
              checked(static_cast<__int128>(d) * o.d));
}

Frac Frac::operator*(const Frac& o) const {
  return Frac(checked(static_cast<__int128>(n) * o.n),
              checked(static_cast<__int128>(d) * o.d));
}

Frac Frac::operator/(const Frac& o) const {
  if (o.n == 0) throw std::invalid_argument("division by zero fraction");
  return Frac(checked(static_cast<__int128>(n) * o.d),
              checked(static_cast<__int128>(d) * o.n));
}

bool Frac::operator<(const Frac& o) const {
  return static_cast<__int128>(n) * o.d < static_cast<__int128>(o.n) * d;
}

Frac lane_of(int k, int m) {
  if (m <= 0 || k < 0 || k >= m) throw std::invalid_argument("bad lane index");
  // (2k + 1 - m) / (4m + 4): strictly inside (-1/4, 1/4), pairwise distinct.
  return Frac(2 * k + 1 - m, 4 * m + 4);
}

namespace {

struct Pt {
  Frac x, y;
};

Pt side_point(Side s, const Frac& lane) {
  Frac half(1, 2);
  Frac c = half + lane;
  switch (s) {
    case Side::L: return {Frac::of(0), c};
    case Side::R: return {Frac::of(1), c};
    case Side::B: return {c, Frac::of(0)};
    case Side::T: return {c, Frac::of(1)};
  }
  throw std::invalid_argument("bad side");
}

Frac cross2(const Frac& ax, const Frac& ay, const Frac& bx, const Frac& by) {
  return ax * by - ay * bx;
}

}  // namespace

std::vector<PathCrossing> chord_crossings(const CurvePath& p1, const Frac& lane1,
                                          const CurvePath& p2, const Frac& lane2) {
  if (lane1 == lane2) throw std::invalid_argument("paths must use distinct lanes");
  std::vector<PathCrossing> out;
  for (size_t i = 0; i < p1.size(); ++i) {
    Pt a = side_point(p1[i].in, lane1), b = side_point(p1[i].out, lane1);
    Frac dx1 = b.x - a.x, dy1 = b.y - a.y;
    for (size_t j = 0; j < p2.size(); ++j) {
      if (p1[i].sq != p2[j].sq) continue;
      Pt c = side_point(p2[j].in, lane2), e = side_point(p2[j].out, lane2);
      Frac dx2 = e.x - c.x, dy2 = e.y - c.y;
      Frac den = cross2(dx1, dy1, dx2, dy2);
      if (den.sign() == 0) continue;  // parallel chords in distinct lanes
      // a + t*(b-a) = c + u*(e-c)
      Frac t = cross2(c.x - a.x, c.y - a.y, dx2, dy2) / den;
      Frac u = cross2(c.x - a.x, c.y - a.y, dx1, dy1) / den;
      Frac zero = Frac::of(0), one = Frac::of(1);
      if (!(zero < t) || !(t < one) || !(zero < u) || !(u < one)) continue;
      out.push_back({i, t, j, u, den.sign()});
    }
  }
  return out;
}

int chord_crossing_count(const CurvePath& p1, const Frac& lane1, const CurvePath& p2,
                         const Frac& lane2) {
  return static_cast<int>(chord_crossings(p1, lane1, p2, lane2).size());
}

int chord_crossing_sum(const CurvePath& p1, const Frac& lane1, const CurvePath& p2,
                       const Frac& lane2) {
  int s = 0;
  for (const auto& c : chord_crossings(p1, lane1, p2, lane2)) s += c.sign;
  return s;
}

}  // namespace strata
