// spin.hpp: mod-r framings of the reference surfaces recorded by their
// values on the standard basis curves, with Arf invariants and censuses.
#pragma once

#include <vector>

#include "strata/curve_system.hpp"

namespace strata {

// A mod-r framing, determined by its values on the basis curves:
// vals[0..g-1] on a_1..a_g and vals[g..2g-1] on the dual b-curves (b_i,
// except b_{2g-2} in place of b_1 for the Three labeling).
struct SpinStructure {
  int r = 0;
  int g = 0;
  std::vector<int> vals;  // size 2g, entries in [0, r)
  bool operator==(const SpinStructure&) const = default;
};

// Winding numbers of the prototype's basis curves mod r. r must divide
// gcd(kappa); r = 0 means gcd(kappa) itself.
SpinStructure induced_spin(const Prototype& p, int r = 0);

// Arf invariant sum_i (phi(a_i)+1)(phi(b*_i)+1) mod 2; requires even r.
int arf_invariant(const SpinStructure& s);

// Value vector reduced mod s (s must divide r).
SpinStructure reduce_spin(const SpinStructure& sp, int s);

// Mod-2 quadratic refinement evaluated at a homology class:
// q(x) = sum_k x_k (vals_k + 1) + sum_i x_i x_{g+i} mod 2. Requires even r.
int q_value(const SpinStructure& s, const std::vector<long long>& coords);

struct CensusCounts {
  long long total = 0, even = 0, odd = 0;  // even/odd populated for even r
  bool operator==(const CensusCounts&) const = default;
};

// Number of mod-r framings of a closed genus-g surface: r^{2g} in total;
// for even r the Arf classes have sizes (r/2)^{2g} 2^{g-1} (2^g +- 1).
CensusCounts spin_census(int g, int r);

// The same census by exhaustive enumeration of all r^{2g} value vectors.
CensusCounts spin_census_enumerated(int g, int r);

// Census of the framing invariant classifying the non-hyperelliptic
// connected components over genus-g Teichmueller space for partition
// kappa: the mod-gcd(kappa) census. The moduli 2g-2 and g-1 carry extra
// exceptional components and are rejected.
CensusCounts component_census(int g, const std::vector<int>& kappa);

}  // namespace strata
