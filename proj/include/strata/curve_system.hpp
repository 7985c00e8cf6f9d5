// curve_system.hpp: the reference square-tiled surfaces carrying a standard
// network of simple closed curves, and their degenerations to one-cylinder
// prototypes for a given singularity partition.
//
// The full figure for genus g has 4g-4 squares: 2g-2 crossing squares, one
// per crossing of an a-row with an a-column, plus 2g-2 auxiliary squares
// B_1..B_{2g-2}, each glued to itself vertically so that the vertical circle
// through B_j is a closed curve b_j meeting exactly one a-row once. All
// 2g-2 vertices of the full figure have cone angle 4pi. Deleting the
// B_j with j outside a selected index set fuses vertices into the zeros
// prescribed by a partition kappa of 2g-2, yielding the prototype surface.
//
// Curves are named "a1".."ag" (rows), "a1'".."a{g-1}'" (columns),
// "b1".."b{2g-2}" (vertical circles; on a prototype the deleted ones are
// rerouted around their fused vertex). Chain boundaries c(i,j) are traced
// as the top boundary circle of a neighborhood of the chain of a-curves
// from index i to j.
#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "strata/origami.hpp"
#include "strata/winding.hpp"

namespace strata {

enum class LabelCase { OneTwo, Three };
enum class Parity { Even = 0, Odd = 1 };

// Validates kappa against g (positive parts summing to 2g-2, g >= 3) and
// the spin argument: a parity is required when gcd(kappa) is even and
// rejected when it is odd. Returns which labeling of the figure realizes
// the requested prototype.
LabelCase labeling_case(int g, const std::vector<int>& kappa,
                        const std::optional<Parity>& spin);

// Indices (1-based, in 1..2g-2) of the auxiliary squares kept when
// degenerating to the prototype of kappa, listed in part order: the l-th
// entry is the b-curve whose deletion cluster ends part l. Depends on the
// order of the parts; callers pass kappa as given.
std::vector<int> selected_b_indices(int g, const std::vector<int>& kappa);

struct CurveSystem {
  int g = 0;
  LabelCase lcase = LabelCase::OneTwo;
  Origami full;                          // 4g-4 squares
  std::vector<std::string> names;        // per square: P/Q/L crossing squares, B1..B{2g-2}
  std::vector<std::vector<int>> rows;    // rows[i] = full h-cycle of a_{i+1}, i in 0..g-1
  std::vector<std::array<int, 2>> cols;  // cols[i] = v-cycle pair of a_{i+1}', i in 0..g-2
  std::vector<int> bsq;                  // bsq[j] = square of b_{j+1}, j in 0..2g-3
  std::vector<int> batt;                 // batt[j] = 1-based a-row met by b_{j+1}

  int square(const std::string& name) const;  // throws if unknown
  // Unique crossing square of row r and column c (1-based); throws if disjoint.
  int crossing_square(int row, int col) const;
  // Rows met by column c (1-based pair, lower attachment first).
  std::array<int, 2> column_rows(int col) const;
};

CurveSystem build_curve_system(int g, LabelCase lcase);

struct Prototype {
  CurveSystem cs;
  std::vector<int> kappa;
  std::optional<Parity> spin;
  Origami o;                    // cs.full with non-selected B squares deleted
  std::vector<int> kept;        // selected b indices (1-based), in part order
  std::vector<int> full2p;      // square map, -1 on deleted squares
  std::vector<int> p2full;

  int g() const { return cs.g; }
  bool is_kept(int b_index) const;  // 1-based
  // Basis b-curve paired with a_i (1-based): b_i, except that in the Three
  // labeling a_1 pairs with b_{2g-2}.
  int dual_b(int i) const;
};

Prototype build_prototype(int g, std::vector<int> kappa, std::optional<Parity> spin);

// --- curve realization -------------------------------------------------

// Straight representatives on the full figure: rows ride L->R, columns and
// b-circles ride B->T.
CurvePath realize_full(const CurveSystem& cs, const std::string& name);

// Representative on the prototype. Deleted b-curves are rerouted: the
// vertical circle is replaced by a path entering the fused vertex beside
// the deleted square's old slot and rounding the vertex once.
CurvePath realize_on_prototype(const Prototype& p, const std::string& name);

// Top boundary circle of a neighborhood of the chain joining a_i to a_j on
// the full figure (1 <= i < j <= g; indices above g alias via
// c(i,j) = c(2g-j, 2g-i)). In the Three labeling chains starting at row 1
// route through row 3 (the column a_1' meets rows 1 and 3), and c(1,2) is
// the boundary of the 5-curve chain through rows 1, 3, 2.
CurvePath chain_boundary_full(const CurveSystem& cs, int i, int j);

// Push a full-figure path to the prototype: transits through deleted
// squares are elided. Throws if the path meets a deleted square other than
// by a horizontal transit.
CurvePath transfer_to_prototype(const Prototype& p, const CurvePath& path);

// chain_boundary_full followed by transfer_to_prototype.
CurvePath chain_boundary_on_prototype(const Prototype& p, int i, int j);

// --- homology ----------------------------------------------------------

// Coordinates (alpha_1..alpha_g, beta_1..beta_g) of the path's class in the
// basis {[a_i], [b*_i]} with <a_i, b*_i> = +1: alpha_i is the signed count
// of eastward crossings of the seam edge of b*_i, beta_i the signed count
// of upward crossings of the top edges of row i.
std::vector<long long> homology_coords(const Prototype& p, const CurvePath& path);
std::vector<long long> homology_coords_full(const CurveSystem& cs, const CurvePath& path);

// Algebraic intersection number via coordinates.
long long symplectic_pairing(const std::vector<long long>& x, const std::vector<long long>& y);

// --- catalog and intersection graph -------------------------------------

// Names of the curves in the prototype's network: all rows, all columns,
// and the kept b-curves (in part order).
std::vector<std::string> network_curves(const Prototype& p);

// Geometric intersection counts between network curves (straight
// representatives). Formats: "json" or "dot".
std::string intersection_graph(const Prototype& p, const std::string& format);

}  // namespace strata
