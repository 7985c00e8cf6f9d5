// framed.hpp: the twist action on framed curve classes and on framings.
//
// A framed class records an embedded curve's homology coordinates and its
// winding value mod r. Twisting about a framed class t sends x to
// x + e <x,t> t on coordinates and adds e <x,t> mu_t to the winding value;
// framings transform by the matching pullback on their basis values.
#pragma once

#include <set>

#include "strata/spin.hpp"

namespace strata {

struct FramedClass {
  std::vector<int> coords;  // size 2g, mod r
  int mu = 0;               // winding value mod r
  bool operator==(const FramedClass&) const = default;
};

// Reference framed class of a path: homology coordinates and winding
// number on the prototype, reduced mod r.
FramedClass framed_class_of_path(const Prototype& p, const CurvePath& path, int r);

// <x, t> mod r in the standard symplectic basis.
int framed_pairing(const FramedClass& x, const FramedClass& t, int r);

// Value of the framing phi on the embedded curve t, where t's mu was
// measured on the reference framing ref: framings differ by a linear form.
int spin_value(const SpinStructure& phi, const SpinStructure& ref, const FramedClass& t);

FramedClass twist_transvection(const FramedClass& x, const FramedClass& t, int r,
                               int e = 1);

// Pullback of phi under the e-th power of the twist about the curve t:
// each basis value moves by e <e_k, t> phi(t).
SpinStructure twist_pullback(const SpinStructure& phi, const SpinStructure& ref,
                             const FramedClass& t, int e = 1);

struct OrbitResult {
  long long size = 0;
  bool capped = false;
};

// Orbit of a framing under the twists about all network b-curves (kept and
// rerouted), rows, and columns of the reference prototype. cap < 0 means
// unbounded.
OrbitResult spin_twist_orbit(const Prototype& ref, int r, const SpinStructure& start,
                             long long cap = -1);

// Orbit of a coordinate vector under the transvections about the given
// classes, all mod r.
std::set<std::vector<int>> transvection_orbit(const std::vector<FramedClass>& gens,
                                              const std::vector<int>& start, int r,
                                              long long cap = -1, bool* capped = nullptr);

// Framed classes of the twist generators of the prototype: all rows, all
// columns, and all 2g-2 b-curves.
std::vector<FramedClass> twist_generators(const Prototype& p, int r);
std::vector<std::string> twist_generator_names(const Prototype& p);

// Canonical mod-2 lift of x + y into the framed class extension. Basis
// classes lift with fiber coefficient 0; the lift of a sum gains the mod-2
// intersection pairing of the summands on the fiber coordinate, so the
// result only depends on x + y.
FramedClass johnson_lift(const std::vector<int>& x, const std::vector<int>& y);

}  // namespace strata
