// origami.hpp: square-tiled surfaces as a pair of gluing permutations.
//
// A surface of n unit squares is encoded by two permutations of {0..n-1}:
// h(s) = square glued to the right edge of s, v(s) = square glued to the top
// edge of s. Singular vertices, genus, cylinders, shears and isomorphism
// tests all reduce to permutation combinatorics on (h, v).
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace strata {

// Permutation of {0..n-1} with cached inverse.
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<int> images);
  static Perm identity(int n);

  int size() const { return static_cast<int>(fwd_.size()); }
  int operator()(int i) const { return fwd_[i]; }
  int inv(int i) const { return bwd_[i]; }
  const std::vector<int>& images() const { return fwd_; }

  Perm inverse() const;
  // (a*b)(x) = a(b(x)).
  friend Perm operator*(const Perm& a, const Perm& b);
  bool operator==(const Perm&) const = default;

  std::vector<std::vector<int>> cycles() const;

 private:
  std::vector<int> fwd_, bwd_;
};

struct Origami {
  int n = 0;
  Perm h, v;  // right neighbor, up neighbor

  int right(int s) const { return h(s); }
  int left(int s) const { return h.inv(s); }
  int up(int s) const { return v(s); }
  int down(int s) const { return v.inv(s); }
  bool operator==(const Origami&) const = default;
};

// Validates sizes and permutation-ness; throws std::invalid_argument.
Origami make_origami(std::vector<int> h, std::vector<int> v);

bool is_connected(const Origami& o);

// Vertices: cycles of the corner permutation K(s) = v(h(v^-1(h^-1(s)))),
// one cycle per vertex, indexed by the bottom-left corner of s. A cycle of
// length L is a cone point of angle 2*pi*L, i.e. a zero of order L-1.
std::vector<std::vector<int>> vertex_cycles(const Origami& o);

// Orders of the zeros (cycle length - 1), zeros of order 0 dropped, sorted
// ascending.
std::vector<int> singularity_profile(const Origami& o);

// Genus from the profile: sum(orders) = 2g - 2; the torus (empty profile)
// has genus 1. Requires connectedness.
int genus(const Origami& o);

// --- corners ----------------------------------------------------------
// A corner is (square, which); rotating counterclockwise around the vertex
// the corner touches enumerates one 90-degree sector per step.
enum class CornerKind : uint8_t { TR = 0, BR = 1, BL = 2, TL = 3 };
struct Corner {
  int sq;
  CornerKind kind;
  bool operator==(const Corner&) const = default;
};
// The next sector counterclockwise around the same vertex:
// TR(s) -> TL(h s) -> BL(v h s) -> BR(h^-1 v h s) -> TR(v^-1 h^-1 v h s).
Corner ccw_next(const Origami& o, Corner c);
// The next sector clockwise (inverse of ccw_next).
Corner cw_next(const Origami& o, Corner c);
// All sectors around the vertex containing c, in ccw order starting at c.
// The count is 4*L for a vertex of cone angle 2*pi*L.
std::vector<Corner> sectors_around(const Origami& o, Corner c);

// --- cylinders ---------------------------------------------------------
// A maximal flat cylinder in the given direction. rows lists the h-cycles
// (or v-cycles) bottom to top; every row has the same width; the interface
// between consecutive rows carries no cone point.
enum class Direction : uint8_t { Horizontal, Vertical };
struct Cylinder {
  Direction dir;
  int width = 0;
  std::vector<std::vector<int>> rows;
  int height() const { return static_cast<int>(rows.size()); }
  // Core representative: the bottom row, ordered along the gluing.
  const std::vector<int>& core() const { return rows.front(); }
};
std::vector<Cylinder> cylinders(const Origami& o, Direction dir);
std::vector<Cylinder> all_cylinders(const Origami& o);

// Shearing a cylinder by a full period reglues it identically; the result
// is the same origami together with the marking move: the inverse twist
// about the cylinder core.
struct ShearResult {
  Origami sheared;
  Cylinder cylinder;
  int marking_twist_sign = -1;  // marking changes by T(core)^{sign}
};
ShearResult shear_cylinder(const Origami& o, const Cylinder& cyl);

// Relabeling taking a to b (pi . h_a = h_b . pi, same for v), if one exists.
std::optional<std::vector<int>> isomorphism(const Origami& a, const Origami& b);
inline bool are_isomorphic(const Origami& a, const Origami& b) {
  return isomorphism(a, b).has_value();
}

// JSON round trip: {"n": int, "h": [...], "v": [...]}.
std::string origami_to_json(const Origami& o);
Origami origami_from_json(const std::string& text);

}  // namespace strata
