#include "strata/spin.hpp"

#include <numeric>
#include <stdexcept>

#include "strata/winding.hpp"

namespace strata {

SpinStructure induced_spin(const Prototype& p, int r) {
  int d = 0;
  for (int k : p.kappa) d = std::gcd(d, k);
  if (r == 0) r = d;
  if (r < 1 || d % r != 0)
    throw std::invalid_argument("modulus must divide gcd(kappa)");
  SpinStructure s;
  s.r = r;
  s.g = p.g();
  s.vals.resize(2 * s.g);
  for (int i = 1; i <= s.g; ++i) {
    s.vals[i - 1] = wn_mod(p.o, realize_on_prototype(p, "a" + std::to_string(i)), r);
    s.vals[s.g + i - 1] =
        wn_mod(p.o, realize_on_prototype(p, "b" + std::to_string(p.dual_b(i))), r);
  }
  return s;
}

namespace {

void check_spin(const SpinStructure& s) {
  if (s.r < 1 || s.g < 1 || static_cast<int>(s.vals.size()) != 2 * s.g)
    throw std::invalid_argument("malformed spin structure");
}

}  // namespace

int arf_invariant(const SpinStructure& s) {
  check_spin(s);
  if (s.r % 2 != 0) throw std::invalid_argument("Arf invariant requires even modulus");
  int a = 0;
  for (int i = 0; i < s.g; ++i)
    a ^= ((s.vals[i] + 1) % 2) & ((s.vals[s.g + i] + 1) % 2);
  return a;
}

SpinStructure reduce_spin(const SpinStructure& sp, int s) {
  check_spin(sp);
  if (s < 1 || sp.r % s != 0)
    throw std::invalid_argument("reduction modulus must divide r");
  SpinStructure out = sp;
  out.r = s;
  for (int& v : out.vals) v = ((v % s) + s) % s;
  return out;
}

int q_value(const SpinStructure& s, const std::vector<long long>& coords) {
  check_spin(s);
  if (s.r % 2 != 0) throw std::invalid_argument("quadratic refinement requires even modulus");
  if (static_cast<int>(coords.size()) != 2 * s.g)
    throw std::invalid_argument("coordinate size mismatch");
  long long q = 0;
  for (int k = 0; k < 2 * s.g; ++k) q += coords[k] * (s.vals[k] + 1);
  for (int i = 0; i < s.g; ++i) q += coords[i] * coords[s.g + i];
  return static_cast<int>(((q % 2) + 2) % 2);
}

namespace {

long long checked_pow(long long b, int e) {
  long long out = 1;
  for (int i = 0; i < e; ++i) {
    if (out > (long long)4e18 / (b > 1 ? b : 1))
      throw std::overflow_error("census count does not fit in 64 bits");
    out *= b;
  }
  return out;
}

}  // namespace

CensusCounts spin_census(int g, int r) {
  if (g < 1 || r < 1) throw std::invalid_argument("genus and modulus must be positive");
  CensusCounts c;
  c.total = checked_pow(r, 2 * g);
  if (r % 2 == 0) {
    long long half = checked_pow(r / 2, 2 * g);
    long long tg = checked_pow(2, g);
    c.even = half * (tg / 2) * (tg + 1);
    c.odd = half * (tg / 2) * (tg - 1);
  }
  return c;
}

CensusCounts spin_census_enumerated(int g, int r) {
  if (g < 1 || r < 1) throw std::invalid_argument("genus and modulus must be positive");
  CensusCounts c;
  std::vector<int> vals(2 * g, 0);
  SpinStructure s{r, g, vals};
  while (true) {
    ++c.total;
    if (r % 2 == 0) {
      if (arf_invariant(s) == 0)
        ++c.even;
      else
        ++c.odd;
    }
    int k = 0;
    while (k < 2 * g && ++s.vals[k] == r) s.vals[k++] = 0;
    if (k == 2 * g) break;
  }
  return c;
}

CensusCounts component_census(int g, const std::vector<int>& kappa) {
  // Validation mirrors the prototype constructor (parity-free).
  if (g < 3) throw std::invalid_argument("genus must be at least 3");
  int sum = 0, d = 0;
  for (int k : kappa) {
    if (k < 1) throw std::invalid_argument("kappa parts must be positive");
    sum += k;
    d = std::gcd(d, k);
  }
  if (kappa.empty() || sum != 2 * g - 2)
    throw std::invalid_argument("kappa parts must sum to 2g-2");
  if (d == 2 * g - 2 || d == g - 1)
    throw std::invalid_argument(
        "component census unsupported: gcd(kappa) in {2g-2, g-1} has exceptional "
        "hyperelliptic components");
  return spin_census(g, d);
}

}  // namespace strata
